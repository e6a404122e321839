//! Structure-constant algebras, coalgebras and Hopf algebras, plus module
//! algebra and comodule coalgebra structures between them.
//!
//! Tensor powers are flattened row-major: the basis element `e_i ⊗ e_j` of
//! `V ⊗ V` has index `i * dim + j`, and likewise for higher powers.

use std::collections::BTreeMap;

use crate::exactlin::{check_dim, invert_matrix, Inversion, LinError, Matrix, Vector};
use crate::report::{tuples, verify, AxiomEntry, CheckReport};
use crate::scalar::Scalar;
use crate::tensorspace::{BasedSpace, LinearMap};

/// Label of the flattened tensor index `idx` in `space^{⊗legs}`.
pub fn power_label(space: &BasedSpace, legs: usize, mut idx: usize) -> String {
    let n = space.dim();
    let mut parts = vec![String::new(); legs];
    for slot in parts.iter_mut().rev() {
        let l = space.label(idx % n);
        *slot = if l.contains('⊗') {
            format!("({l})")
        } else {
            l.to_string()
        };
        idx /= n;
    }
    parts.join("⊗")
}

/// Splits a flat index of `A ⊗ B` (with `dim B = inner`) into its two legs.
pub fn split_pair(idx: usize, inner: usize) -> (usize, usize) {
    (idx / inner, idx % inner)
}

/// A unital associative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    space: BasedSpace,
    mult: LinearMap,
    unit: Vector,
}

impl Algebra {
    /// `mult` is `dim × dim²`, column `i * dim + j` holding `e_i · e_j`.
    pub fn new(space: BasedSpace, mult: Matrix, unit: Vector) -> Result<Self, LinError> {
        check_dim("unit vector", space.dim(), unit.dim())?;
        let mult = LinearMap::new(space.tensor(&space), space.clone(), mult)?;
        Ok(Algebra { space, mult, unit })
    }

    pub fn from_products(
        space: BasedSpace,
        mut product: impl FnMut(usize, usize) -> Vector,
        unit: Vector,
    ) -> Result<Self, LinError> {
        let n = space.dim();
        let cols = (0..n * n).map(|k| product(k / n, k % n)).collect();
        let mult = Matrix::from_columns(n, cols)?;
        Algebra::new(space, mult, unit)
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mult_map(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        self.mult.image_of_basis(i * self.dim() + j)
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                out.add_scaled(&(x * y), self.mul_basis(i, j));
            }
        }
        out
    }

    pub fn product(&self, factors: &[&Vector]) -> Vector {
        factors.iter().fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// Factorwise product in `A ⊗ A`.
    pub fn mul_pairs(&self, u: &Vector, v: &Vector) -> Vector {
        let n = self.dim();
        let mut out = Vector::zeros(n * n);
        for (p, x) in u.iter() {
            let (i, j) = split_pair(p, n);
            for (q, y) in v.iter() {
                let (k, l) = split_pair(q, n);
                let left = self.mul_basis(i, k);
                let right = self.mul_basis(j, l);
                out.add_scaled(&(x * y), &left.tensor(right));
            }
        }
        out
    }

    /// Left multiplication on the first leg of a pair: `(z ⊗ 1) · u`.
    pub fn left_mul_first(&self, z: &Vector, u: &Vector) -> Vector {
        self.mul_pairs(&z.tensor(&self.unit), u)
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        Algebra::from_products(
            self.space.clone(),
            |i, j| self.mul_basis(j, i).clone(),
            self.unit.clone(),
        )
        .expect("opposite has the same shape")
        .with_dim_check(n)
    }

    fn with_dim_check(self, n: usize) -> Self {
        debug_assert_eq!(self.dim(), n);
        self
    }
}

/// Structure constants of a (possibly Hopf) bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    name: String,
    algebra: Algebra,
    comult: LinearMap,
    counit: Vector,
    antipode: Option<LinearMap>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HopfLevel {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

impl HopfData {
    /// `comult` is `dim² × dim` (column `i` holds `Δ(e_i)`), `counit` is a
    /// covector stored as a vector, `antipode` is `dim × dim`.
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra,
        comult: Matrix,
        counit: Vector,
        antipode: Option<Matrix>,
    ) -> Result<Self, LinError> {
        let space = algebra.space().clone();
        check_dim("counit covector", space.dim(), counit.dim())?;
        let comult = LinearMap::new(space.clone(), space.tensor(&space), comult)?;
        let antipode = antipode
            .map(|m| LinearMap::new(space.clone(), space.clone(), m))
            .transpose()?;
        Ok(HopfData {
            name: name.into(),
            algebra,
            comult,
            counit,
            antipode,
        })
    }

    pub fn from_fns(
        name: impl Into<String>,
        algebra: Algebra,
        mut coproduct: impl FnMut(usize) -> Vector,
        mut counit: impl FnMut(usize) -> Scalar,
        antipode: Option<&mut dyn FnMut(usize) -> Vector>,
    ) -> Result<Self, LinError> {
        let n = algebra.dim();
        let comult = Matrix::from_columns(n * n, (0..n).map(&mut coproduct).collect())?;
        let counit = Vector::from_dense(&(0..n).map(&mut counit).collect::<Vec<_>>());
        let antipode = match antipode {
            Some(f) => Some(Matrix::from_columns(n, (0..n).map(f).collect())?),
            None => None,
        };
        HopfData::new(name, algebra, comult, counit, antipode)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn space(&self) -> &BasedSpace {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn comult_map(&self) -> &LinearMap {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&LinearMap> {
        self.antipode.as_ref()
    }

    pub fn with_antipode(mut self, s: Option<LinearMap>) -> Self {
        self.antipode = s;
        self
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        self.algebra.mul(u, v)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        self.algebra.mul_basis(i, j)
    }

    pub fn coproduct_basis(&self, i: usize) -> &Vector {
        self.comult.image_of_basis(i)
    }

    pub fn coproduct(&self, u: &Vector) -> Vector {
        self.comult.apply(u)
    }

    pub fn counit_of(&self, u: &Vector) -> Scalar {
        self.counit.dot(u)
    }

    pub fn counit_basis(&self, i: usize) -> Scalar {
        self.counit.get(i)
    }

    /// `S(u)`; panics when no antipode is stored.
    pub fn s(&self, u: &Vector) -> Vector {
        self.antipode.as_ref().expect("antipode required").apply(u)
    }

    pub fn s_basis(&self, i: usize) -> &Vector {
        self.antipode.as_ref().expect("antipode required").image_of_basis(i)
    }

    /// Iterated coproduct of `e_i` into `legs` tensor factors, expanding the
    /// last leg each time. Terms are merged and sorted by index tuple.
    pub fn sweedler(&self, i: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(legs >= 1);
        let n = self.dim();
        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        terms.insert(vec![i], Scalar::one());
        for _ in 1..legs {
            let mut next: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
            for (idx, c) in terms {
                let last = *idx.last().expect("nonempty");
                for (p, d) in self.coproduct_basis(last).iter() {
                    let (a, b) = split_pair(p, n);
                    let mut key = idx[..idx.len() - 1].to_vec();
                    key.push(a);
                    key.push(b);
                    let slot = next.entry(key).or_insert_with(Scalar::zero);
                    *slot += &(&c * d);
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        terms.into_iter().collect()
    }

    /// Two-leg Sweedler terms `(i1, i2, c)` of `Δ(e_i)`.
    pub fn coproduct_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.coproduct_basis(i)
            .iter()
            .map(|(p, c)| {
                let (a, b) = split_pair(p, n);
                (a, b, c.clone())
            })
            .collect()
    }

    pub fn variant(&self, which: Variant) -> HopfData {
        let n = self.dim();
        let algebra = match which {
            Variant::Op | Variant::OpCop => self.algebra.opposite(),
            Variant::Cop => self.algebra.clone(),
        };
        let comult = match which {
            Variant::Cop | Variant::OpCop => {
                let cols = (0..n)
                    .map(|i| {
                        Vector::from_pairs(
                            n * n,
                            self.coproduct_basis(i).iter().map(|(p, c)| {
                                let (a, b) = split_pair(p, n);
                                (b * n + a, c.clone())
                            }),
                        )
                    })
                    .collect();
                Matrix::from_columns(n * n, cols).expect("same shape")
            }
            Variant::Op => self.comult.matrix().clone(),
        };
        let suffix = match which {
            Variant::Op => "op",
            Variant::Cop => "cop",
            Variant::OpCop => "op,cop",
        };
        HopfData::new(
            format!("{}^{suffix}", self.name),
            algebra,
            comult,
            self.counit.clone(),
            self.antipode.as_ref().map(|s| s.matrix().clone()),
        )
        .expect("variant keeps dimensions")
    }

    /// Label of index `idx` in the `legs`-fold tensor power.
    pub fn power_label(&self, legs: usize, idx: usize) -> String {
        power_label(self.space(), legs, idx)
    }
}

/// Axiom ids in report order.
pub const HOPF_AXIOMS: &[(&str, HopfLevel)] = &[
    ("algebra.associativity", HopfLevel::Algebra),
    ("algebra.left-unit", HopfLevel::Algebra),
    ("algebra.right-unit", HopfLevel::Algebra),
    ("coalgebra.coassociativity", HopfLevel::Coalgebra),
    ("coalgebra.left-counit", HopfLevel::Coalgebra),
    ("coalgebra.right-counit", HopfLevel::Coalgebra),
    ("bialgebra.comult-multiplicative", HopfLevel::Bialgebra),
    ("bialgebra.comult-unit", HopfLevel::Bialgebra),
    ("bialgebra.counit-multiplicative", HopfLevel::Bialgebra),
    ("bialgebra.counit-unit", HopfLevel::Bialgebra),
    ("hopf.antipode-left", HopfLevel::Hopf),
    ("hopf.antipode-right", HopfLevel::Hopf),
];

fn scalar_vec(c: Scalar) -> Vector {
    Vector::from_pairs(1, [(0, c)])
}

/// Checks every axiom at or below `level` on all basis tuples.
pub fn check_hopf_axioms(h: &HopfData, level: HopfLevel) -> CheckReport {
    let n = h.dim();
    let sp = h.space();
    let describe = |t: &[usize]| t.iter().map(|&i| sp.label(i).to_string()).collect::<Vec<_>>();
    let l1 = |i: usize| sp.label(i).to_string();
    let l2 = |i: usize| h.power_label(2, i);
    let l3 = |i: usize| h.power_label(3, i);
    let lk = |_: usize| "1".to_string();
    let e = |i: usize| h.basis(i);

    let mut report = CheckReport::new();
    for &(id, lvl) in HOPF_AXIOMS {
        if lvl > level {
            continue;
        }
        let entry = match id {
            "algebra.associativity" => verify(id, tuples(&[n, n, n]), &describe, &l1, |t| {
                let ab = h.mul_basis(t[0], t[1]);
                let bc = h.mul_basis(t[1], t[2]);
                (h.mul(ab, &e(t[2])), h.mul(&e(t[0]), bc))
            }),
            "algebra.left-unit" => verify(id, tuples(&[n]), &describe, &l1, |t| {
                (h.mul(h.unit(), &e(t[0])), e(t[0]))
            }),
            "algebra.right-unit" => verify(id, tuples(&[n]), &describe, &l1, |t| {
                (h.mul(&e(t[0]), h.unit()), e(t[0]))
            }),
            "coalgebra.coassociativity" => verify(id, tuples(&[n]), &describe, &l3, |t| {
                let mut lhs = Vector::zeros(n * n * n);
                let mut rhs = Vector::zeros(n * n * n);
                for (a, b, c) in h.coproduct_terms(t[0]) {
                    lhs.add_scaled(&c, &h.coproduct_basis(a).tensor(&e(b)));
                    rhs.add_scaled(&c, &e(a).tensor(h.coproduct_basis(b)));
                }
                (lhs, rhs)
            }),
            "coalgebra.left-counit" => verify(id, tuples(&[n]), &describe, &l1, |t| {
                let mut lhs = Vector::zeros(n);
                for (a, b, c) in h.coproduct_terms(t[0]) {
                    lhs.add_scaled(&(&c * &h.counit_basis(a)), &e(b));
                }
                (lhs, e(t[0]))
            }),
            "coalgebra.right-counit" => verify(id, tuples(&[n]), &describe, &l1, |t| {
                let mut lhs = Vector::zeros(n);
                for (a, b, c) in h.coproduct_terms(t[0]) {
                    lhs.add_scaled(&(&c * &h.counit_basis(b)), &e(a));
                }
                (lhs, e(t[0]))
            }),
            "bialgebra.comult-multiplicative" => verify(id, tuples(&[n, n]), &describe, &l2, |t| {
                let lhs = h.coproduct(h.mul_basis(t[0], t[1]));
                let rhs = h.algebra().mul_pairs(h.coproduct_basis(t[0]), h.coproduct_basis(t[1]));
                (lhs, rhs)
            }),
            "bialgebra.comult-unit" => verify(id, tuples(&[]), &describe, &l2, |_| {
                (h.coproduct(h.unit()), h.unit().tensor(h.unit()))
            }),
            "bialgebra.counit-multiplicative" => verify(id, tuples(&[n, n]), &describe, &lk, |t| {
                let lhs = h.counit_of(h.mul_basis(t[0], t[1]));
                let rhs = h.counit_basis(t[0]) * h.counit_basis(t[1]);
                (scalar_vec(lhs), scalar_vec(rhs))
            }),
            "bialgebra.counit-unit" => verify(id, tuples(&[]), &describe, &lk, |_| {
                (scalar_vec(h.counit_of(h.unit())), scalar_vec(Scalar::one()))
            }),
            "hopf.antipode-left" | "hopf.antipode-right" => {
                if h.antipode().is_none() {
                    AxiomEntry::fail(id, "no antipode supplied")
                } else {
                    let left = id == "hopf.antipode-left";
                    verify(id, tuples(&[n]), &describe, &l1, |t| {
                        let mut lhs = Vector::zeros(n);
                        for (a, b, c) in h.coproduct_terms(t[0]) {
                            let term = if left {
                                h.mul(h.s_basis(a), &e(b))
                            } else {
                                h.mul(&e(a), h.s_basis(b))
                            };
                            lhs.add_scaled(&c, &term);
                        }
                        (lhs, h.unit().scale(&h.counit_basis(t[0])))
                    })
                }
            }
            _ => unreachable!("unknown axiom id {id}"),
        };
        report.push(entry);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConvolutionError {
    #[error(transparent)]
    Dimension(#[from] LinError),
    #[error("map is not convolution invertible")]
    NonInvertible {
        /// Nonzero `g` (flattened column-major, `dim codomain` entries per
        /// domain basis element) with `f ⋆ g = 0`.
        kernel: Vector,
    },
}

/// Convolution inverse of `f: C → A`, where `C` supplies the coalgebra and
/// `A` the algebra. Solves `f ⋆ g = η∘ε` exactly and confirms `g ⋆ f = η∘ε`.
pub fn convolution_inverse(
    f: &LinearMap,
    coalgebra: &HopfData,
    algebra: &Algebra,
) -> Result<LinearMap, ConvolutionError> {
    let n = coalgebra.dim();
    let m = algebra.dim();
    check_dim("convolution domain", n, f.domain().dim())?;
    check_dim("convolution codomain", m, f.codomain().dim())?;

    // Unknown g(e_j) coordinate k sits at j*m + k; so does output column j, row r.
    let mut entries = Vec::new();
    for j in 0..n {
        for (j1, j2, c) in coalgebra.coproduct_terms(j) {
            let fj1 = f.image_of_basis(j1);
            for k in 0..m {
                let prod = algebra.mul(fj1, &algebra.basis(k));
                for (r, x) in prod.iter() {
                    entries.push((j * m + r, j2 * m + k, &c * x));
                }
            }
        }
    }
    let left = Matrix::from_entries(n * m, n * m, entries)?;
    let mut target = Vector::zeros(n * m);
    for j in 0..n {
        let eps = coalgebra.counit_basis(j);
        for (r, x) in algebra.unit().iter() {
            target.add_at(j * m + r, &(&eps * x));
        }
    }
    let inverse = match invert_matrix(&left)? {
        Inversion::Inverse(inv) => inv,
        Inversion::Singular { kernel } => return Err(ConvolutionError::NonInvertible { kernel }),
    };
    let flat = inverse.apply(&target)?;
    let g = LinearMap::from_fn(f.domain(), f.codomain(), |j| {
        Vector::from_pairs(m, (0..m).map(|k| (k, flat.get(j * m + k))))
    })?;
    // Right-sided check.
    for j in 0..n {
        let mut acc = Vector::zeros(m);
        for (j1, j2, c) in coalgebra.coproduct_terms(j) {
            acc.add_scaled(&c, &algebra.mul(g.image_of_basis(j1), f.image_of_basis(j2)));
        }
        if acc != algebra.unit().scale(&coalgebra.counit_basis(j)) {
            return Err(ConvolutionError::NonInvertible { kernel: flat });
        }
    }
    Ok(g)
}

/// Right action `carrier ⊗ acting → carrier`, written `b ◁ a`.
#[derive(Clone, Copy, Debug)]
pub struct ActionData<'a> {
    pub acting: &'a HopfData,
    pub carrier: &'a HopfData,
    pub map: &'a LinearMap,
}

impl<'a> ActionData<'a> {
    pub fn new(acting: &'a HopfData, carrier: &'a HopfData, map: &'a LinearMap) -> Result<Self, LinError> {
        check_dim("action domain", carrier.dim() * acting.dim(), map.domain().dim())?;
        check_dim("action codomain", carrier.dim(), map.codomain().dim())?;
        Ok(ActionData { acting, carrier, map })
    }

    pub fn act_basis(&self, b: usize, a: usize) -> &Vector {
        self.map.image_of_basis(b * self.acting.dim() + a)
    }

    pub fn act(&self, b: &Vector, a: &Vector) -> Vector {
        let mut out = Vector::zeros(self.carrier.dim());
        for (i, x) in b.iter() {
            for (j, y) in a.iter() {
                out.add_scaled(&(x * y), self.act_basis(i, j));
            }
        }
        out
    }
}

/// Left coaction `carrier → coacting ⊗ carrier`, written `δ(c) = c^{[-1]} ⊗ c^{[0]}`.
#[derive(Clone, Copy, Debug)]
pub struct CoactionData<'a> {
    pub coacting: &'a HopfData,
    pub carrier: &'a HopfData,
    pub map: &'a LinearMap,
}

impl<'a> CoactionData<'a> {
    pub fn new(coacting: &'a HopfData, carrier: &'a HopfData, map: &'a LinearMap) -> Result<Self, LinError> {
        check_dim("coaction domain", carrier.dim(), map.domain().dim())?;
        check_dim(
            "coaction codomain",
            coacting.dim() * carrier.dim(),
            map.codomain().dim(),
        )?;
        Ok(CoactionData { coacting, carrier, map })
    }

    /// Terms `(h, c, coeff)` of `δ(e_i)`.
    pub fn terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let nc = self.carrier.dim();
        self.map
            .image_of_basis(i)
            .iter()
            .map(|(p, x)| {
                let (h, c) = split_pair(p, nc);
                (h, c, x.clone())
            })
            .collect()
    }

    pub fn coact(&self, v: &Vector) -> Vector {
        self.map.apply(v)
    }
}

fn pair_label(a: &BasedSpace, b: &BasedSpace, idx: usize) -> String {
    let (i, j) = split_pair(idx, b.dim());
    format!("{}⊗{}", a.label(i), b.label(j))
}

/// Right module axioms and the module-algebra laws.
pub fn check_action_module_algebra(act: &ActionData<'_>) -> CheckReport {
    let car = act.carrier;
    let h = act.acting;
    let (na, nh) = (car.dim(), h.dim());
    let describe = |labels: &[&BasedSpace], t: &[usize]| -> Vec<String> {
        t.iter().zip(labels).map(|(&i, s)| s.label(i).to_string()).collect()
    };
    let d_ahh = |t: &[usize]| describe(&[car.space(), h.space(), h.space()], t);
    let d_a = |t: &[usize]| describe(&[car.space()], t);
    let d_aah = |t: &[usize]| describe(&[car.space(), car.space(), h.space()], t);
    let d_h = |t: &[usize]| describe(&[h.space()], t);
    let la = |i: usize| car.space().label(i).to_string();
    let ca = |i: usize| car.basis(i);
    let ch = |i: usize| h.basis(i);

    let mut report = CheckReport::new();
    report.push(verify(
        "action.associativity",
        tuples(&[na, nh, nh]),
        &d_ahh,
        &la,
        |t| {
            let lhs = act.act(act.act_basis(t[0], t[1]), &ch(t[2]));
            let rhs = act.act(&ca(t[0]), h.mul_basis(t[1], t[2]));
            (lhs, rhs)
        },
    ));
    report.push(verify("action.unit", tuples(&[na]), &d_a, &la, |t| {
        (act.act(&ca(t[0]), h.unit()), ca(t[0]))
    }));
    report.push(verify(
        "action.module-algebra-mult",
        tuples(&[na, na, nh]),
        &d_aah,
        &la,
        |t| {
            let lhs = act.act(car.mul_basis(t[0], t[1]), &ch(t[2]));
            let mut rhs = Vector::zeros(na);
            for (h1, h2, c) in h.coproduct_terms(t[2]) {
                rhs.add_scaled(&c, &car.mul(act.act_basis(t[0], h1), act.act_basis(t[1], h2)));
            }
            (lhs, rhs)
        },
    ));
    report.push(verify("action.module-algebra-unit", tuples(&[nh]), &d_h, &la, |t| {
        (act.act(car.unit(), &ch(t[0])), car.unit().scale(&h.counit_basis(t[0])))
    }));
    report
}

/// Left comodule axioms and the comodule-coalgebra laws.
pub fn check_coaction_comodule_coalgebra(co: &CoactionData<'_>) -> CheckReport {
    let car = co.carrier;
    let h = co.coacting;
    let (nc, nh) = (car.dim(), h.dim());
    let describe = |t: &[usize]| vec![car.space().label(t[0]).to_string()];
    let l_hhc = |idx: usize| {
        let (hh, c) = split_pair(idx, nc);
        format!("{}⊗{}", h.power_label(2, hh), car.space().label(c))
    };
    let l_c = |i: usize| car.space().label(i).to_string();
    let l_hcc = |idx: usize| {
        let (hh, cc) = split_pair(idx, nc * nc);
        format!("{}⊗{}", h.space().label(hh), car.power_label(2, cc))
    };
    let l_h = |i: usize| h.space().label(i).to_string();
    let eh = |i: usize| h.basis(i);
    let ec = |i: usize| car.basis(i);

    let mut report = CheckReport::new();
    report.push(verify(
        "coaction.coassociativity",
        tuples(&[nc]),
        &describe,
        &l_hhc,
        |t| {
            let mut lhs = Vector::zeros(nh * nh * nc);
            let mut rhs = Vector::zeros(nh * nh * nc);
            for (x, c, k) in co.terms(t[0]) {
                lhs.add_scaled(&k, &h.coproduct_basis(x).tensor(&ec(c)));
                rhs.add_scaled(&k, &eh(x).tensor(co.map.image_of_basis(c)));
            }
            (lhs, rhs)
        },
    ));
    report.push(verify("coaction.counit", tuples(&[nc]), &describe, &l_c, |t| {
        let mut lhs = Vector::zeros(nc);
        for (x, c, k) in co.terms(t[0]) {
            lhs.add_scaled(&(&k * &h.counit_basis(x)), &ec(c));
        }
        (lhs, ec(t[0]))
    }));
    report.push(verify(
        "coaction.comodule-coalgebra-comult",
        tuples(&[nc]),
        &describe,
        &l_hcc,
        |t| {
            let mut lhs = Vector::zeros(nh * nc * nc);
            for (x, c, k) in co.terms(t[0]) {
                lhs.add_scaled(&k, &eh(x).tensor(car.coproduct_basis(c)));
            }
            let mut rhs = Vector::zeros(nh * nc * nc);
            for (c1, c2, k) in car.coproduct_terms(t[0]) {
                for (x1, d1, k1) in co.terms(c1) {
                    for (x2, d2, k2) in co.terms(c2) {
                        let coeff = &(&k * &k1) * &k2;
                        let term = h.mul_basis(x1, x2).tensor(&ec(d1)).tensor(&ec(d2));
                        rhs.add_scaled(&coeff, &term);
                    }
                }
            }
            (lhs, rhs)
        },
    ));
    report.push(verify(
        "coaction.comodule-coalgebra-counit",
        tuples(&[nc]),
        &describe,
        &l_h,
        |t| {
            let mut lhs = Vector::zeros(nh);
            for (x, c, k) in co.terms(t[0]) {
                lhs.add_scaled(&(&k * &car.counit_basis(c)), &eh(x));
            }
            (lhs, h.unit().scale(&car.counit_basis(t[0])))
        },
    ));
    report
}

/// Labels of the pair space `a ⊗ b`, for witness rendering.
pub fn pair_labeler<'a>(a: &'a BasedSpace, b: &'a BasedSpace) -> impl Fn(usize) -> String + 'a {
    move |idx| pair_label(a, b, idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Group algebra of Z2 written out by hand.
    fn kz2() -> HopfData {
        let sp = BasedSpace::new(["e", "s"]).unwrap();
        let alg = Algebra::from_products(sp, |i, j| Vector::basis(2, (i + j) % 2), Vector::basis(2, 0)).unwrap();
        HopfData::from_fns(
            "kZ2",
            alg,
            |i| Vector::basis(4, i * 2 + i),
            |_| Scalar::one(),
            Some(&mut |i| Vector::basis(2, i)),
        )
        .unwrap()
    }

    fn ground() -> HopfData {
        let alg =
            Algebra::from_products(BasedSpace::ground(), |_, _| Vector::basis(1, 0), Vector::basis(1, 0)).unwrap();
        HopfData::from_fns(
            "k",
            alg,
            |_| Vector::basis(1, 0),
            |_| Scalar::one(),
            Some(&mut |_| Vector::basis(1, 0)),
        )
        .unwrap()
    }

    #[test]
    fn ground_field_passes_everything() {
        let r = check_hopf_axioms(&ground(), HopfLevel::Hopf);
        assert!(r.passed());
        assert_eq!(r.entries.len(), HOPF_AXIOMS.len());
    }

    #[test]
    fn levels_are_cumulative() {
        let h = kz2();
        assert_eq!(check_hopf_axioms(&h, HopfLevel::Algebra).entries.len(), 3);
        assert_eq!(check_hopf_axioms(&h, HopfLevel::Coalgebra).entries.len(), 6);
        assert_eq!(check_hopf_axioms(&h, HopfLevel::Bialgebra).entries.len(), 10);
        assert!(check_hopf_axioms(&h, HopfLevel::Hopf).passed());
    }

    #[test]
    fn missing_antipode_fails_hopf_level_only() {
        let h = kz2().with_antipode(None);
        assert!(check_hopf_axioms(&h, HopfLevel::Bialgebra).passed());
        let r = check_hopf_axioms(&h, HopfLevel::Hopf);
        assert_eq!(r.failing_ids(), vec!["hopf.antipode-left", "hopf.antipode-right"]);
    }

    #[test]
    fn cop_is_an_involution() {
        let h = kz2();
        assert_eq!(
            h.variant(Variant::Cop).variant(Variant::Cop).comult_map(),
            h.comult_map()
        );
        // Commutative algebra: op leaves the product alone.
        assert_eq!(h.variant(Variant::Op).algebra().mult_map(), h.algebra().mult_map());
    }

    #[test]
    fn convolution_inverse_of_identity_is_antipode() {
        let h = kz2();
        let id = LinearMap::identity(h.space());
        let s = convolution_inverse(&id, &h, h.algebra()).unwrap();
        assert_eq!(&s, h.antipode().unwrap());
    }

    #[test]
    fn convolution_unit_is_its_own_inverse() {
        let h = kz2();
        let ue = LinearMap::from_fn(h.space(), h.space(), |j| h.unit().scale(&h.counit_basis(j))).unwrap();
        assert_eq!(convolution_inverse(&ue, &h, h.algebra()).unwrap(), ue);
    }

    #[test]
    fn zero_map_is_not_convolution_invertible() {
        let h = kz2();
        let zero = LinearMap::from_fn(h.space(), h.space(), |_| Vector::zeros(2)).unwrap();
        match convolution_inverse(&zero, &h, h.algebra()) {
            Err(ConvolutionError::NonInvertible { kernel }) => assert!(!kernel.is_zero()),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn sweedler_of_grouplike() {
        let h = kz2();
        assert_eq!(h.sweedler(1, 3), vec![(vec![1, 1, 1], Scalar::one())]);
    }

    #[test]
    fn trivial_action_and_coaction_pass() {
        let h = kz2();
        let n = h.dim();
        let trivial = LinearMap::from_fn(&h.space().tensor(h.space()), h.space(), |p| {
            let (b, a) = split_pair(p, n);
            Vector::basis(n, b).scale(&h.counit_basis(a))
        })
        .unwrap();
        let act = ActionData::new(&h, &h, &trivial).unwrap();
        assert!(check_action_module_algebra(&act).passed());
        let co_map = LinearMap::from_fn(h.space(), &h.space().tensor(h.space()), |c| {
            h.unit().tensor(&Vector::basis(n, c))
        })
        .unwrap();
        let co = CoactionData::new(&h, &h, &co_map).unwrap();
        assert!(check_coaction_comodule_coalgebra(&co).passed());
    }
}
