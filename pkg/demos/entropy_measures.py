#!/usr/bin/env python3
"""Walk through the entropy measures on three worked two-level mixtures.

The running theme: the entropy a receiver actually experiences per
measurement is the entropy of the density matrix diagonal in the
measurement basis, which can exceed the eigenvalue (von Neumann) entropy
whenever coherences are present.
"""

import math

import numpy as np

from qentro import (
    BITS,
    NATS,
    DensityMatrix,
    Ensemble,
    PureState,
    bekenstein_bound,
    differential_entropy,
    ensemble_bound_check,
    informational,
    mix,
    pure_entropy,
    quantized_entropy,
    shannon,
    von_neumann,
)


def banner(title):
    print(f"\n{'=' * 64}\n  {title}\n{'=' * 64}")


plus = PureState([1 / math.sqrt(2), 1 / math.sqrt(2)])

banner("1. Equal blend of |+><+| with the maximally mixed state")
ens1 = Ensemble([(0.5, plus)], mixed_part=(0.5, DensityMatrix(np.eye(2) / 2)))
rho1 = mix(ens1)
print("rho =")
print(np.round(rho1.matrix.real, 4))
print(f"informational entropy S_i = {informational(rho1).value:.4f} bits")
print(f"von Neumann entropy   S_n = {von_neumann(rho1).value:.4f} bits")
check1 = ensemble_bound_check(ens1)
print(f"component sum 0.5*1 + 0.5*1 = {check1.rhs:.4f} bits  (equality case)")
print("-> every measurement still yields a full bit, although the")
print("   eigenvalue entropy is only 0.811: the coherent half hides")
print("   information the receiver cannot avoid sampling.")

banner("2. Skewed blend: 0.3 pure + 0.7 diag(0.8, 0.2)")
mixed2 = DensityMatrix(np.diag([0.8, 0.2]))
ens2 = Ensemble([(0.3, plus)], mixed_part=(0.7, mixed2))
rho2 = mix(ens2)
print("rho =")
print(np.round(rho2.matrix.real, 4))
check2 = ensemble_bound_check(ens2)
print(f"S_i(rho)              = {check2.lhs:.4f} bits")
print(f"weighted components   = 0.3*1 + 0.7*{von_neumann(mixed2).value:.4f}"
      f" = {check2.rhs:.4f} bits")
print(f"S_i >= component sum holds: {check2.holds}")
print("-> the pure component is NOT aligned with the receiver basis, so")
print("   the mixture carries more accessible entropy than its parts.")

banner("3. One diagonal matrix, two ensembles")
a = PureState([math.sqrt(0.75), math.sqrt(0.25)])
b = PureState([math.sqrt(0.75), -math.sqrt(0.25)])
rho3_direct = DensityMatrix(np.diag([0.75, 0.25]))
rho3_pure = mix(Ensemble([(0.5, a), (0.5, b)]))
print("diag(0.75, 0.25) directly, and as an equal mix of")
print("sqrt(3/4)|0> +- sqrt(1/4)|1>:")
print(f"  S_i direct     = {informational(rho3_direct).value:.12f} bits")
print(f"  S_i from mix   = {informational(rho3_pure).value:.12f} bits")
print(f"  per-component  = {pure_entropy(a).value:.12f} bits")
print("Same matrix, same measure, regardless of the decomposition.")
print("Mind the log base when quoting values:")
print(f"  {informational(rho3_direct, BITS).value:.4f} bits"
      f" = {informational(rho3_direct, NATS).value:.4f} nats")
print("  (a 3-decimal figure of 0.559 for this state only makes sense as")
print("   the natural-log value 0.562 rounded down; in bits it is 0.811)")

banner("4. Classical measures: discrete, continuous, quantized")
print(f"uniform over 2 outcomes:      {shannon([0.5, 0.5]).value:.3f} bits")
print(f"(1/2, 1/4, 1/4) distribution: {shannon([0.5, 0.25, 0.25]).value:.3f} bits")
x = np.linspace(-8.0, 8.0, 4001)
gauss = np.exp(-x * x / 2) / math.sqrt(2 * math.pi)
h = differential_entropy(x, gauss, NATS)
print(f"standard Gaussian density:    {h.value:.4f} nats"
      f"  (closed form {0.5 * math.log(2 * math.pi * math.e):.4f})")
for dx in (1.0, 0.1, 0.01):
    print(f"  measured at precision {dx:<5} -> {quantized_entropy(h, dx).value:.4f} nats")
print("Finite precision keeps the total finite; perfect precision would not.")

banner("5. Area bound")
for area in (4.0, 4.0 * math.log(2.0), 400.0):
    nats = bekenstein_bound(area, NATS).value
    bits = bekenstein_bound(area, BITS).value
    print(f"area {area:10.4f} (Planck units) -> {nats:10.4f} nats = {bits:10.4f} bits")
