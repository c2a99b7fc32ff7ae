"""
Energies of trees
=================

The energy of a graph is the sum of the absolute adjacency eigenvalues.  For
a tree, the Laplacian-energy-like invariant (sum of square roots of the
Laplacian eigenvalues) equals the incidence energy and half the energy of
the subdivision.  We check this numerically over all small trees and look
at which tree minimises the energy.
"""

import numpy as np

from extremal_trees import degree_class, greedy_tree, m_tree
from extremal_trees.degseq import all_degree_sequences
from extremal_trees.invariants import energy, incidence_energy, lel
from extremal_trees.invariants.spectral import adjacency_matrix, jacobi_eigenvalues
from extremal_trees.tree import path, subdivision
from extremal_trees.verify import all_trees

# Jacobi eigenvalues against LAPACK on one example
A = adjacency_matrix(path(6))
print("path P6 eigenvalues:", np.round(jacobi_eigenvalues(A), 6))
print("numpy eigvalsh    :", np.round(np.linalg.eigvalsh(A), 6))
print("closed form       :", np.round(np.sort(2 * np.cos(np.pi * np.arange(1, 7) / 7)), 6))

n = 9
trees = all_trees(n)
gap = np.array([lel(t) - energy(subdivision(t)) / 2 for t in trees])
ie_gap = np.array([lel(t) - incidence_energy(t) for t in trees])
print(f"\n{len(trees)} trees on {n} vertices")
print(f"max |lel - En(S)/2| = {np.abs(gap).max():.2e}")
print(f"max |lel - IE|      = {np.abs(ie_gap).max():.2e}")

# for each degree sequence, where does the energy minimum sit?
print(f"\n{'degree sequence':>22} {'En(G)':>9} {'En(M)':>9} {'min':>9}")
for D in all_degree_sequences(n)[:8]:
    values = np.array([energy(t) for t in degree_class(D)])
    print(f"{str(D):>22} {energy(greedy_tree(D)):9.5f} {energy(m_tree(D)):9.5f} {values.min():9.5f}")
