"""
Field invariants of imaginary quadratic fields
==============================================

Walk a grid of square-free d < 0 and print the data every other
computation consumes: discriminant, 2-part, ramified primes, class
number (by reduced-form enumeration) and the genus-theory 2-torsion.
"""

from bianchi_lefschetz.quadfield import (ambiguous_form_count, is_square_free,
                                         make_field, reduced_forms,
                                         splitting_type, two_torsion_count)

print(f"{'d':>5} {'D':>6} {'D2':>3} {'t':>2} {'h':>3} {'2-torsion':>9}  ramified")
for d in range(-2, -41, -1):
    if d in (-1, -3) or not is_square_free(d):
        continue
    f = make_field(d)
    print(f"{f.d:>5} {f.D:>6} {f.D2:>3} {f.t:>2} {f.h:>3} "
          f"{two_torsion_count(f):>9}  {f.ramified_primes}")

# The 2-torsion count 2^(t-1) is genus theory; the ambiguous reduced forms
# (b = 0, a = b or a = c) realize those classes concretely.
f = make_field(-105)
print(f"\nd = -105: forms {reduced_forms(f.D)}")
print(f"ambiguous forms: {ambiguous_form_count(f.D)}  == 2^(t-1) = {two_torsion_count(f)}")

# Splitting of small primes in a few fields.
for d in (-2, -7, -11):
    f = make_field(d)
    row = {p: splitting_type(f, p) for p in (2, 3, 5, 7, 11, 13)}
    print(f"\nsplitting in Q(sqrt({d})): {row}")
