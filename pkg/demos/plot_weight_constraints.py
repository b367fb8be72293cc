"""
Weight constraint programs through smodels rules
================================================

Weight constraints with both a lower and an upper bound are compiled into
plain smodels rules.  Each constraint gets a hidden atom recording that
its lower bound is met and, when there is an upper bound, another one
recording that the upper bound is exceeded.
"""

from lpequiv import enumerate_models, ext, format_model, format_program, parse_wcp, sns_compile
from lpequiv.textio import format_wcp
from lpequiv.wcp import wc_is_stable

W = parse_wcp("""
1 { a=1, b=1, c=1 } 2.
1 { d=1 } :- 2 { a=1, b=1, c=2 } 3.
""")
print(format_wcp(W))

T, m = sns_compile(W)
print(format_program(T))

models = list(enumerate_models(T))
print(len(models), "stable models")
for K in models:
    M = K & W.hb
    # every stable model of the translation extends exactly one model of W
    assert wc_is_stable(W, M) and ext(W, M, m) == K
    print("  ", format_model(T, K))
