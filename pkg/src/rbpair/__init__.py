"""rbpair: exact computer algebra for Rota-Baxter operators and matched pairs.

The library constructs and verifies, over exact rational arithmetic:

* Rota-Baxter operators of any rational weight on finite-dimensional Lie
  algebras, their companion operators, descendent brackets, and the induced
  subalgebra splits;
* matched pairs of Lie algebras, bicrossed products, and the projection
  calculus that decomposes a bicrossed product into factors;
* quadratic (invariant nondegenerate form) structures and the induced
  Manin-triple form on a bicrossed product;
* the finite-group analogue of all of the above, including exhaustive
  enumeration of Rota-Baxter operators on small groups.

Every check either passes exactly or returns a concrete counterexample
witness; no floating point is used anywhere.
"""

__version__ = "0.1.0"
