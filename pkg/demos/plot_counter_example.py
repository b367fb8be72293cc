"""
Reading a counter-example from the translation
==============================================

Two programs over the visible atom ``a``.  The first one has a hidden atom
``b`` and two stable models; the second has no stable models at all.  The
translation ``EQT(P, Q)`` has a stable model for every model of ``P``
without a visible match in ``Q``, and each one decodes to a witness.
"""

from lpequiv import decode, enumerate_models, eqt, format_program, parse_program, verify_translation

P = parse_program("""
a :- not b.
b :- not a.
#hide b.
""")
Q = parse_program("""
a :- b, not a.
b :- not a.
#hide b.
""")

T, rn = eqt(P, Q, linear_choice=False)
print(format_program(T))

for K in enumerate_models(T):
    for line in decode(K, rn, P, Q, T).lines(P, Q):
        print(line)
    print()

# ``M`` is the model of P, ``N`` the candidate of Q with the same visible
# atoms, and ``L`` the least model of Q's reduct for ``N``.  N != L, so N
# is not stable and nothing in Q matches M.
v = verify_translation(P, Q, both_directions=True)
print(type(v).__name__, v.direction)
