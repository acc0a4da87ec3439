"""Compare exact circle moments with adaptive quadrature."""

from dunkl_dihedral.harmonic import jacobi_moment, quadrature_moment

for k0, k1 in [(0.3, 0.7), (1.25, 0.5), (2.0, 3.0)]:
    worst = max(abs(float(jacobi_moment(j).evaluate(k0, k1)) - quadrature_moment(j, k0, k1)) for j in range(13))
    print(f"k = ({k0}, {k1}): max deviation over 13 moments = {worst:.2e}")
