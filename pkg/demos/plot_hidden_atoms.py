"""
When hidden atoms are a problem
===============================

The translation-based check needs every program to have enough visible
atoms: fixing the visible atoms must leave exactly one way to fill in the
hidden ones.  A cheap syntactic test settles many programs, an exact test
enumerates the hidden part for every visible interpretation, and counting
models per visible projection works without the assumption.
"""

from lpequiv import (
    eval_hidden,
    format_program,
    has_enough_visible_exact,
    has_enough_visible_overapprox,
    is_separable,
    parse_program,
    verify_oracle,
    verify_translation,
)
from lpequiv.bench import gen_even_subsets

# an odd loop through a hidden atom: separable, but some hidden parts
# have no stable model at all
odd = parse_program("a :- not a. b :- a, not b. #visible a.")
print("odd loop:", has_enough_visible_overapprox(odd).value, has_enough_visible_exact(odd), is_separable(odd))
print(format_program(eval_hidden(odd, odd.atoms(["a"]))))

# a hidden choice with two models per projection
P = parse_program("a :- b. a :- c. b :- not c. c :- not b. #hide b, c.")
Q = parse_program("""{ b, c }. a :- b, c. a :- not b, not c.
                     b :- c, not b. c :- b, not c. #hide b, c.""")
print("translation:", verify_translation(P, Q, eva_mode="exact"))
print("fiber counting:", type(verify_oracle(P, Q)).__name__)

# two parity encodings with stratified hidden parts pass the cheap test
for n in (3, 5):
    p, q = gen_even_subsets("p", n), gen_even_subsets("q", n)
    print(f"even subsets n={n}:", has_enough_visible_overapprox(q).value, type(verify_translation(p, q)).__name__)
