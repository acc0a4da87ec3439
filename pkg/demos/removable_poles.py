"""Show the paired poles of K_n on the line k0 + k1 = -m and their cancellation."""

from dunkl_dihedral.singular import check_k_removable, kernel_pairing, ungrouped_kernel_orders

s, m = 2, 1
for n in range(1, 2 * s * m + 3):
    orders = ungrouped_kernel_orders(s, m, n)
    report = check_k_removable(s, m, n)
    print(
        f"n = {n}: groups {kernel_pairing(s, m, n)}, "
        f"pole order per term {orders}, grouped finite: {report.ok}"
    )
