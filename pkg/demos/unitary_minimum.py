#!/usr/bin/env python3
"""Minimize the basis-dependent entropy over unitary rotations and verify
that the floor it finds is exactly the von Neumann entropy.

The receiver can lower the entropy they experience by rotating their
measurement basis; the best possible choice diagonalizes the state, at
which point the accessible entropy equals the eigenvalue entropy.  The
optimizer never sees the eigendecomposition (it searches Givens rotation
angles numerically), so the match is a genuine two-route check.
"""

import numpy as np

from qentro import informational, min_informational_over_unitaries, von_neumann
from qentro.linalg import hermitian_eigen, is_unitary
from qentro.states import DensityMatrix, random_density

rng = np.random.default_rng(2024)

print("dim | S_i(rho)  S_n(rho)  found min  residual   evals")
print("----+--------------------------------------------------")
for dim in (2, 3, 4):
    for _ in range(3):
        rho = random_density(dim, rng)
        report = min_informational_over_unitaries(rho, seed=7)
        assert is_unitary(report.minimizer, 1e-8)
        print(
            f"  {dim} | {informational(rho).value:8.5f}  {von_neumann(rho).value:8.5f}"
            f"  {report.min_value:8.5f}  {report.residual_vs_von_neumann:9.2e}"
            f"  {report.iterations:6d}"
        )

print()
print("The eigenbasis achieves the same floor analytically:")
rho = random_density(3, rng)
eig = hermitian_eigen(rho.matrix)
u = eig.eigenvectors.conj().T
rotated = u @ rho.matrix @ u.conj().T
rotated = DensityMatrix((rotated + rotated.conj().T) / 2)
print(f"  S_i(V† rho V) = {informational(rotated).value:.12f}")
print(f"  S_n(rho)      = {von_neumann(rho).value:.12f}")

print()
print("A tiny evaluation budget degrades gracefully (best-so-far + flag):")
report = min_informational_over_unitaries(rho, budget=50, seed=3)
print(
    f"  budget 50 -> min {report.min_value:.5f}, residual"
    f" {report.residual_vs_von_neumann:.2e}, exhausted={report.budget_exhausted}"
)
report = min_informational_over_unitaries(rho, budget=200_000, seed=3)
print(
    f"  full budget -> min {report.min_value:.5f}, residual"
    f" {report.residual_vs_von_neumann:.2e}, exhausted={report.budget_exhausted}"
)
