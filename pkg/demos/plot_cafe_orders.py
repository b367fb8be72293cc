"""
Stable models of a small ordering program
=========================================

A customer picks drinks and snacks with choice rules, a cardinality
constraint decides whether they are happy, and a weight rule adds up the
bill.  Every stable model is one acceptable order.
"""

from lpequiv import enumerate_models, format_model, is_stable, least_model, parse_program, reduce
from lpequiv.textio import format_rule

CAFE = """
{ coffee, tea, biscuit, cake, cognac }.
{ cream, sugar } :- coffee.
cognac :- coffee.
{ milk, lemon, sugar } :- tea.
mess :- milk, lemon.
happy :- 1 { biscuit, cake, cognac }.
bankrupt :- 6 [ coffee=1, tea=1, biscuit=1, cake=2, cognac=4 ].
acceptable :- happy, not bankrupt, not mess.
compute { acceptable }.
"""

P = parse_program(CAFE)
models = list(enumerate_models(P))
print(len(models), "acceptable orders")
for M in models[:5]:
    print("  ", format_model(P, M))

# Pick one order and look at the reduct it induces.  Choice rules keep
# only the atoms the order contains, and negative literals are evaluated
# against the order, so what is left is a positive program.
order = P.atoms(["tea", "lemon", "biscuit", "happy", "acceptable"])
print("\nreduct for", format_model(P, order))
for r in reduce(P, order):
    print("  ", format_rule(r, P.name))

# The order is stable because it is exactly the least model of its reduct.
print("least model:", format_model(P, least_model(reduce(P, order))))
print("stable:", is_stable(P, order))
