"""Elementary / power-sum base changes and the finite q-identity.

The degeneration identities for quiver moduli are, at bottom, symmetric
function identities: the closed-form base change between e_n and p_n, its
multiplicative extension to e_lambda, and the principal specialization
x_i -> q^(i-1) that turns the n-th elementary function into a Gaussian
factor q^binom(n,2) / ((1-q)...(1-q^n)).
"""

from quivermoduli import (
    SymPoly,
    e_lambda_to_p,
    e_to_p,
    lemma3_identity,
    p_to_e,
    principal_specialize,
)

# -- base change in closed form ---------------------------------------------

for n in (1, 2, 3, 4):
    print("e_%d in the p basis:" % n, dict(e_to_p(n).coeffs))
print()
for n in (1, 2, 3):
    print("p_%d in the e basis:" % n, dict(p_to_e(n).coeffs))

# -- products of elementary functions -----------------------------------------

print("\ne_(2,1) in the p basis:", dict(e_lambda_to_p((2, 1)).coeffs))
product = e_to_p(2) * e_to_p(1)
assert e_lambda_to_p((2, 1)) == product
print("(equals the product e_2 * e_1, as it must)")

# -- principal specialization ---------------------------------------------------

print("\nspecialization of e_1:", principal_specialize(SymPoly.basis_element("e", (1,))))
print("specialization of p_2:", principal_specialize(SymPoly.basis_element("p", (2,))))
print("specialization of e_2:", principal_specialize(SymPoly.basis_element("e", (2,))))

# -- the q-identity behind the motivic degeneration formula ----------------------
# Specializing the e/p base change and clearing denominators gives, for each
# n, an identity between the Gaussian factor and a sum over multiplicity
# vectors; with q -> L it becomes the [GL_n] identity the recursion uses.

for n in range(1, 7):
    lhs, rhs = lemma3_identity(n)
    print("q-identity at n = %d:" % n, "holds" if lhs == rhs else "FAILS")
