"""Exact-arithmetic workbench for the Bannai-Ito algebra inside U(osp(1,2)).

Subpackages and modules:

* :mod:`biosp.ncalgebra` -- parser and PBW normal ordering for words in A+, A0, A-, P
* :mod:`biosp.polyspace` -- rational Laurent polynomials, reflection, Dunkl operators
* :mod:`biosp.realization` -- holomorphic realization and the realized K1, K2, K3
* :mod:`biosp.jacobi_m1` -- little -1 Jacobi polynomials and the K3 eigenbasis
* :mod:`biosp.biortho` -- moments, the K2 eigenbasis, overlaps, Bannai-Ito recurrence
* :mod:`biosp.cli` -- command line front end
"""

__version__ = "0.1.0"
