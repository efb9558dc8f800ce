use crate::algebra::ops::{coordinates, from_coordinates, product_size};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::syntax::{Signature, Term};

/// A derived operation given by a tuple of terms, evaluated coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Descriptor {
    pub arity: usize,
    pub components: Vec<Term>,
}

#[derive(Clone, Debug)]
enum Shape {
    /// Universe `A_1 x .. x A_m`; component `i` is a term of factor `i` in `x1..x<arity>`.
    Product(Vec<FiniteAlgebra>),
    /// Universe `A^n`; each component is a `k*n`-ary term of `A`, where `x<(j-1)n+i>`
    /// stands for coordinate `i` of argument `j`.
    Power(FiniteAlgebra, usize),
}

/// An algebra whose operations are supplied on demand from term descriptors.
#[derive(Clone, Debug)]
pub struct VirtualAlgebra {
    shape: Shape,
    sizes: Vec<usize>,
    size: usize,
}

const VIRTUAL_CAP: usize = 1 << 16;

impl VirtualAlgebra {
    pub fn product(factors: Vec<FiniteAlgebra>) -> Result<Self> {
        let sizes: Vec<usize> = factors.iter().map(FiniteAlgebra::size).collect();
        let size = product_size(&sizes, VIRTUAL_CAP)?;
        Ok(VirtualAlgebra {
            shape: Shape::Product(factors),
            sizes,
            size,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn factor_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn coordinates(&self, e: Elem) -> Vec<Elem> {
        coordinates(&self.sizes, e)
    }

    pub fn element(&self, coords: &[Elem]) -> Elem {
        from_coordinates(&self.sizes, coords)
    }

    /// Checks that `d` fits this algebra's shape.
    pub fn check(&self, d: &Descriptor) -> Result<()> {
        if d.components.len() != self.sizes.len() {
            return Err(Error::Invalid(format!(
                "descriptor has {} components, expected {}",
                d.components.len(),
                self.sizes.len()
            )));
        }
        for (i, t) in d.components.iter().enumerate() {
            let (bound, sig) = match &self.shape {
                Shape::Product(fs) => (d.arity, fs[i].signature()),
                Shape::Power(a, n) => (d.arity * n, a.signature()),
            };
            t.check(sig)?;
            if let Some(v) = t.vars().into_iter().find(|&v| v == 0 || v as usize > bound) {
                return Err(Error::ArityMismatch {
                    name: format!("component {i} (uses x{v})"),
                    expected: bound,
                    found: v as usize,
                });
            }
        }
        Ok(())
    }

    pub fn apply(&self, d: &Descriptor, args: &[Elem]) -> Result<Elem> {
        if args.len() != d.arity {
            return Err(Error::ArityMismatch {
                name: "descriptor".into(),
                expected: d.arity,
                found: args.len(),
            });
        }
        let coords: Vec<Vec<Elem>> = args.iter().map(|&a| self.coordinates(a)).collect();
        let out = match &self.shape {
            Shape::Product(factors) => factors
                .iter()
                .zip(&d.components)
                .enumerate()
                .map(|(i, (alg, t))| {
                    let mut env = vec![0; d.arity + 1];
                    for (j, c) in coords.iter().enumerate() {
                        env[j + 1] = c[i];
                    }
                    alg.eval(t, &env)
                })
                .collect::<Result<Vec<_>>>()?,
            Shape::Power(alg, _) => {
                let mut env = vec![0];
                env.extend(coords.iter().flatten().copied());
                d.components
                    .iter()
                    .map(|t| alg.eval(t, &env))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(self.element(&out))
    }

    /// Fixes a finite set of named descriptors as the signature of a concrete algebra.
    pub fn materialize(&self, symbols: &[(String, Descriptor)]) -> Result<FiniteAlgebra> {
        let sig = Signature::new(symbols.iter().map(|(n, d)| (n.clone(), d.arity)))?;
        for (_, d) in symbols {
            self.check(d)?;
        }
        let mut err = None;
        let alg = FiniteAlgebra::from_fn(sig, self.size, |sym, args| {
            self.apply(&symbols[sym].1, args).unwrap_or_else(|e| {
                err.get_or_insert(e);
                0
            })
        });
        match err {
            Some(e) => Err(e),
            None => alg,
        }
    }
}

/// The universe `A^n` with operations `m_t` for descriptors `t` of `n` terms.
pub fn matrix_power_oracle(alg: &FiniteAlgebra, n: usize) -> Result<VirtualAlgebra> {
    if n == 0 {
        return Err(Error::Invalid("matrix power exponent must be at least 1".into()));
    }
    let sizes = vec![alg.size(); n];
    let size = product_size(&sizes, VIRTUAL_CAP)?;
    Ok(VirtualAlgebra {
        shape: Shape::Power(alg.clone(), n),
        sizes,
        size,
    })
}
