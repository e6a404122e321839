//! Built-in examples: finite groups, their group and function Hopf algebras,
//! Sweedler's four-dimensional Hopf algebra, crossed modules, strict 2-groups
//! and the Hopf 2-algebra bundles built from them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebroid::{
    build_right_bialgebroid, check_lambda_bijective, check_mu_bijective, BialgebroidError, CanonicalMaps,
};
use crate::bicross::{BicrossData, Hopf2Algebra};
use crate::exactlin::Vector;
use crate::hopfcore::{Algebra, HopfData};
use crate::scalar::Scalar;
use crate::tensorspace::{BasedSpace, LinearMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("{structure} violates {law} at {}", .witness.join(", "))]
    Law {
        structure: &'static str,
        law: &'static str,
        witness: Vec<String>,
    },
    #[error("malformed {structure}: {message}")]
    Shape { structure: &'static str, message: String },
    #[error("{0}")]
    Build(String),
}

fn law(structure: &'static str, law: &'static str, witness: Vec<String>) -> CatalogError {
    CatalogError::Law {
        structure,
        law,
        witness,
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub mult_table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl FiniteGroup {
    /// Validates the table and derives inverses and identity.
    pub fn from_table(labels: Vec<String>, mult_table: Vec<Vec<usize>>) -> Result<Self, CatalogError> {
        let n = labels.len();
        let shape = |message: String| CatalogError::Shape {
            structure: "group",
            message,
        };
        if n == 0 {
            return Err(shape("empty group".into()));
        }
        if mult_table.len() != n || mult_table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
            return Err(shape(format!(
                "multiplication table must be {n}×{n} with entries below {n}"
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult_table[e][a] == a && mult_table[a][e] == a))
            .ok_or_else(|| law("group", "identity", vec![]))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mult_table[a][b] == identity && mult_table[b][a] == identity)
                .ok_or_else(|| law("group", "inverses", vec![labels[a].clone()]))?;
            inverse.push(inv);
        }
        let g = FiniteGroup {
            labels,
            mult_table,
            inverse,
            identity,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        let n = self.order();
        let shape = |message: String| CatalogError::Shape {
            structure: "group",
            message,
        };
        if self.mult_table.len() != n
            || self.inverse.len() != n
            || self.identity >= n
            || self
                .mult_table
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&k| k >= n))
            || self.inverse.iter().any(|&k| k >= n)
        {
            return Err(shape(format!("tables must match order {n}")));
        }
        for a in 0..n {
            if self.mul(self.identity, a) != a || self.mul(a, self.identity) != a {
                return Err(law("group", "identity", vec![self.labels[a].clone()]));
            }
            if self.mul(a, self.inverse[a]) != self.identity || self.mul(self.inverse[a], a) != self.identity {
                return Err(law("group", "inverses", vec![self.labels[a].clone()]));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(law("group", "associativity", self.names(&[a, b, c])));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult_table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.labels[i].clone()).collect()
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1, "σ")
    }

    /// `1, σ, σ^2, …` with `σ` named by `generator`.
    pub fn cyclic(n: usize, generator: &str) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(labels, table).expect("cyclic group")
    }

    /// Permutations of three points in cycle notation; `(12)(23) = (123)`
    /// composing right to left.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|r| *r == pq).expect("closed")
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(labels.iter().map(|s| s.to_string()).collect(), table).expect("S3")
    }

    /// Direct product with labels `(a,b)` and index `a * |other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let n = self.order() * m;
        let labels = (0..n)
            .map(|k| format!("({},{})", self.label(k / m), other.label(k % m)))
            .collect();
        let table = (0..n)
            .map(|p| {
                (0..n)
                    .map(|q| self.mul(p / m, q / m) * m + other.mul(p % m, q % m))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(labels, table).expect("product of groups")
    }

    fn is_hom_to(&self, target: &FiniteGroup, f: &[usize]) -> Option<(usize, usize)> {
        (0..self.order())
            .flat_map(|a| (0..self.order()).map(move |b| (a, b)))
            .find(|&(a, b)| f[self.mul(a, b)] != target.mul(f[a], f[b]))
    }
}

/// `kG`: grouplike coproduct, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> HopfData {
    let n = g.order();
    let space = BasedSpace::new(g.labels.clone()).expect("distinct group labels");
    let alg = Algebra::from_products(
        space,
        |a, b| Vector::basis(n, g.mul(a, b)),
        Vector::basis(n, g.identity),
    )
    .expect("shape");
    HopfData::from_fns(
        format!("k[{}]", group_name(g)),
        alg,
        |a| Vector::basis(n * n, a * n + a),
        |_| Scalar::one(),
        Some(&mut |a| Vector::basis(n, g.inv(a))),
    )
    .expect("shape")
}

/// Functions on `G` with basis of delta functions `f_g`.
pub fn function_hopf_algebra(g: &FiniteGroup) -> HopfData {
    let n = g.order();
    let space = BasedSpace::new(g.labels.iter().map(|l| format!("f_{l}"))).expect("distinct group labels");
    let unit = Vector::from_pairs(n, (0..n).map(|a| (a, Scalar::one())));
    let alg = Algebra::from_products(
        space,
        |a, b| if a == b { Vector::basis(n, a) } else { Vector::zeros(n) },
        unit,
    )
    .expect("shape");
    HopfData::from_fns(
        format!("A({})", group_name(g)),
        alg,
        |c| {
            let mut out = Vector::zeros(n * n);
            for a in 0..n {
                let b = g.mul(g.inv(a), c);
                out.add_at(a * n + b, &Scalar::one());
            }
            out
        },
        |a| if a == g.identity { Scalar::one() } else { Scalar::zero() },
        Some(&mut |a| Vector::basis(n, g.inv(a))),
    )
    .expect("shape")
}

fn group_name(g: &FiniteGroup) -> String {
    format!("G{}", g.order())
}

/// Sweedler's Hopf algebra on the basis `1, g, x, gx`.
pub fn sweedler_h4() -> HopfData {
    let space = BasedSpace::new(["1", "g", "x", "gx"]).expect("labels");
    // (sign, index) of the product of basis monomials; None for zero.
    let table: [[Option<(i64, usize)>; 4]; 4] = [
        [Some((1, 0)), Some((1, 1)), Some((1, 2)), Some((1, 3))],
        [Some((1, 1)), Some((1, 0)), Some((1, 3)), Some((1, 2))],
        [Some((1, 2)), Some((-1, 3)), None, None],
        [Some((1, 3)), Some((-1, 2)), None, None],
    ];
    let alg = Algebra::from_products(
        space,
        |i, j| match table[i][j] {
            Some((s, k)) => Vector::basis(4, k).scale(&Scalar::from_int(s)),
            None => Vector::zeros(4),
        },
        Vector::basis(4, 0),
    )
    .expect("shape");
    let pair = |a: usize, b: usize| a * 4 + b;
    HopfData::from_fns(
        "H4",
        alg,
        |i| match i {
            0 => Vector::basis(16, pair(0, 0)),
            1 => Vector::basis(16, pair(1, 1)),
            2 => Vector::from_pairs(16, [(pair(0, 2), Scalar::one()), (pair(2, 1), Scalar::one())]),
            _ => Vector::from_pairs(16, [(pair(1, 3), Scalar::one()), (pair(3, 0), Scalar::one())]),
        },
        |i| if i < 2 { Scalar::one() } else { Scalar::zero() },
        Some(&mut |i| match i {
            2 => Vector::basis(4, 3),
            3 => Vector::basis(4, 2).scale(&Scalar::from_int(-1)),
            _ => Vector::basis(4, i),
        }),
    )
    .expect("shape")
}

/// The mirror data of `h` with the coaction factors multiplied in the wrong
/// order: `δ(h) = h₃ S(h₁) ⊗ h₂`.
pub fn misordered_mirror_data(h: &HopfData) -> Option<BicrossData> {
    let m = crate::bicross::build_mirror(h).ok()?;
    let s = h.antipode()?;
    let n = h.dim();
    let bs = m.data.coaction.codomain().clone();
    let coaction = LinearMap::from_fn(h.space(), &bs, |x| {
        let mut out = Vector::zeros(n * n);
        for (idx, c) in h.sweedler(x, 3) {
            let left = h.mul(&h.basis(idx[2]), s.image_of_basis(idx[0]));
            out.add_scaled(&c, &left.tensor(&h.basis(idx[1])));
        }
        out
    })
    .ok()?;
    BicrossData::new(m.data.a, m.data.b, m.data.action, coaction).ok()
}

/// Mirror action of `h` paired with the trivial coaction `a ↦ 1 ⊗ a`.
pub fn trivial_coaction_mirror_data(h: &HopfData) -> Option<BicrossData> {
    let m = crate::bicross::build_mirror(h).ok()?;
    let bs = m.data.coaction.codomain().clone();
    let unit = m.data.b.unit().clone();
    let coaction = LinearMap::from_fn(h.space(), &bs, |x| unit.tensor(&h.basis(x))).ok()?;
    BicrossData::new(m.data.a, m.data.b, m.data.action, coaction).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModuleData {
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    /// `∂ : H → G` as an index table.
    pub boundary: Vec<usize>,
    /// `action[g][h] = g ▷ h`.
    pub action: Vec<Vec<usize>>,
}

impl CrossedModuleData {
    pub fn new(
        g: FiniteGroup,
        h: FiniteGroup,
        boundary: Vec<usize>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self, CatalogError> {
        let c = CrossedModuleData { g, h, boundary, action };
        c.validate()?;
        Ok(c)
    }

    /// `H ⊳ G` with trivial boundary and trivial action.
    pub fn trivial(g: FiniteGroup, h: FiniteGroup) -> Self {
        let boundary = vec![g.identity; h.order()];
        let action = (0..g.order()).map(|_| (0..h.order()).collect()).collect();
        CrossedModuleData { g, h, boundary, action }
    }

    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action[g][h]
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        self.g.validate()?;
        self.h.validate()?;
        let (ng, nh) = (self.g.order(), self.h.order());
        if self.boundary.len() != nh
            || self.boundary.iter().any(|&k| k >= ng)
            || self.action.len() != ng
            || self.action.iter().any(|r| r.len() != nh || r.iter().any(|&k| k >= nh))
        {
            return Err(CatalogError::Shape {
                structure: "crossed module",
                message: format!("boundary must map {nh} elements into {ng}; action must be {ng}×{nh}"),
            });
        }
        let cm = "crossed module";
        if let Some((a, b)) = self.h.is_hom_to(&self.g, &self.boundary) {
            return Err(law(cm, "boundary homomorphism", self.h.names(&[a, b])));
        }
        for g in 0..ng {
            if let Some((a, b)) = self.h.is_hom_to(&self.h, &self.action[g]) {
                return Err(law(
                    cm,
                    "action by automorphisms",
                    vec![self.g.label(g).into(), self.h.label(a).into(), self.h.label(b).into()],
                ));
            }
            for g2 in 0..ng {
                for h in 0..nh {
                    if self.act(self.g.mul(g, g2), h) != self.act(g, self.act(g2, h)) {
                        return Err(law(
                            cm,
                            "action compatibility",
                            vec![self.g.label(g).into(), self.g.label(g2).into(), self.h.label(h).into()],
                        ));
                    }
                }
            }
        }
        for g in 0..ng {
            for h in 0..nh {
                let lhs = self.boundary[self.act(g, h)];
                let rhs = self.g.mul(self.g.mul(g, self.boundary[h]), self.g.inv(g));
                if lhs != rhs {
                    return Err(law(
                        cm,
                        "boundary equivariance",
                        vec![self.g.label(g).into(), self.h.label(h).into()],
                    ));
                }
            }
        }
        for h in 0..nh {
            for h2 in 0..nh {
                let lhs = self.act(self.boundary[h], h2);
                let rhs = self.h.mul(self.h.mul(h, h2), self.h.inv(h));
                if lhs != rhs {
                    return Err(law(cm, "Peiffer identity", self.h.names(&[h, h2])));
                }
            }
        }
        Ok(())
    }
}

/// A strict 2-group: a group of 2-cells `G1` over a group of objects `G0`
/// with a vertical composition defined on composable pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGroupData {
    pub g0: FiniteGroup,
    pub g1: FiniteGroup,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// `(e₂, e₁) ↦ e₂ • e₁` for `s(e₂) = t(e₁)`.
    pub vert: BTreeMap<(usize, usize), usize>,
    pub ident: Vec<usize>,
}

impl TwoGroupData {
    pub fn compose(&self, e2: usize, e1: usize) -> Option<usize> {
        self.vert.get(&(e2, e1)).copied()
    }

    /// Inverse of `e` for the vertical composition.
    pub fn vertical_inverse(&self, e: usize) -> Option<usize> {
        (0..self.g1.order()).find(|&f| {
            self.compose(f, e) == Some(self.ident[self.src[e]]) && self.compose(e, f) == Some(self.ident[self.tgt[e]])
        })
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        self.g0.validate()?;
        self.g1.validate()?;
        let (n0, n1) = (self.g0.order(), self.g1.order());
        let tg = "2-group";
        if self.src.len() != n1
            || self.tgt.len() != n1
            || self.ident.len() != n0
            || self.src.iter().chain(&self.tgt).any(|&k| k >= n0)
            || self.ident.iter().any(|&k| k >= n1)
            || self.vert.iter().any(|(&(a, b), &c)| a >= n1 || b >= n1 || c >= n1)
        {
            return Err(CatalogError::Shape {
                structure: tg,
                message: "source, target, identity or composition table out of range".into(),
            });
        }
        let l1 = |e: usize| self.g1.label(e).to_string();
        for (name, map) in [("source homomorphism", &self.src), ("target homomorphism", &self.tgt)] {
            if let Some((a, b)) = self.g1.is_hom_to(&self.g0, map) {
                return Err(law(tg, name, vec![l1(a), l1(b)]));
            }
        }
        if let Some((a, b)) = self.g0.is_hom_to(&self.g1, &self.ident) {
            return Err(law(tg, "identity homomorphism", self.g0.names(&[a, b])));
        }
        for e2 in 0..n1 {
            for e1 in 0..n1 {
                let composable = self.src[e2] == self.tgt[e1];
                match (composable, self.compose(e2, e1)) {
                    (true, None) => {
                        return Err(law(tg, "composition defined on composable pairs", vec![l1(e2), l1(e1)]))
                    }
                    (false, Some(_)) => {
                        return Err(law(tg, "composition only on composable pairs", vec![l1(e2), l1(e1)]))
                    }
                    (true, Some(c)) if self.src[c] != self.src[e1] || self.tgt[c] != self.tgt[e2] => {
                        return Err(law(tg, "composite endpoints", vec![l1(e2), l1(e1)]));
                    }
                    _ => {}
                }
            }
        }
        for g in 0..n0 {
            let id = self.ident[g];
            if self.src[id] != g || self.tgt[id] != g {
                return Err(law(tg, "identity endpoints", vec![self.g0.label(g).into()]));
            }
        }
        for e in 0..n1 {
            if self.compose(self.ident[self.tgt[e]], e) != Some(e)
                || self.compose(e, self.ident[self.src[e]]) != Some(e)
            {
                return Err(law(tg, "vertical unit", vec![l1(e)]));
            }
            if self.vertical_inverse(e).is_none() {
                return Err(law(tg, "vertical inverse", vec![l1(e)]));
            }
        }
        for (&(c, b), &cb) in &self.vert {
            for a in 0..n1 {
                if let Some(ac) = self.compose(a, c) {
                    if self.compose(ac, b) != self.compose(a, cb) {
                        return Err(law(tg, "vertical associativity", vec![l1(a), l1(c), l1(b)]));
                    }
                }
            }
        }
        for (&(a, b), &ab) in &self.vert {
            for (&(c, d), &cd) in &self.vert {
                let lhs = self.g1.mul(ab, cd);
                let rhs = self.compose(self.g1.mul(a, c), self.g1.mul(b, d));
                if rhs != Some(lhs) {
                    return Err(law(tg, "interchange", vec![l1(a), l1(b), l1(c), l1(d)]));
                }
            }
        }
        Ok(())
    }
}

/// `G1 = G ⋉ H` with `(g,h)` at index `g * |H| + h`, `s(g,h) = g`,
/// `t(g,h) = ∂(h) g` and `(∂(h) g, h') • (g, h) = (g, h' h)`.
pub fn two_group_from_crossed_module(c: &CrossedModuleData) -> Result<TwoGroupData, CatalogError> {
    c.validate()?;
    let (g, h) = (&c.g, &c.h);
    let (ng, nh) = (g.order(), h.order());
    let n1 = ng * nh;
    let idx = |a: usize, b: usize| a * nh + b;
    let labels = (0..n1)
        .map(|k| format!("({},{})", g.label(k / nh), h.label(k % nh)))
        .collect();
    let table = (0..n1)
        .map(|p| {
            (0..n1)
                .map(|q| {
                    let (g1, h1, g2, h2) = (p / nh, p % nh, q / nh, q % nh);
                    idx(g.mul(g1, g2), h.mul(h1, c.act(g1, h2)))
                })
                .collect()
        })
        .collect();
    let g1 = FiniteGroup::from_table(labels, table)?;
    let src: Vec<usize> = (0..n1).map(|k| k / nh).collect();
    let tgt: Vec<usize> = (0..n1).map(|k| g.mul(c.boundary[k % nh], k / nh)).collect();
    let mut vert = BTreeMap::new();
    for (e2, s2) in src.iter().enumerate() {
        for (e1, t1) in tgt.iter().enumerate() {
            if s2 == t1 {
                vert.insert((e2, e1), idx(e1 / nh, h.mul(e2 % nh, e1 % nh)));
            }
        }
    }
    let ident = (0..ng).map(|a| idx(a, h.identity)).collect();
    let t = TwoGroupData {
        g0: g.clone(),
        g1,
        src,
        tgt,
        vert,
        ident,
    };
    t.validate()?;
    Ok(t)
}

fn canonical_maps(h2: &mut Hopf2Algebra) {
    let lam = check_lambda_bijective(&h2.algebroid, h2.lambda_translation.as_ref());
    let mu = check_mu_bijective(&h2.algebroid, h2.mu_translation.as_ref());
    h2.canonical = CanonicalMaps {
        lambda: lam.map,
        lambda_inv: lam.inverse,
        mu: mu.map,
        mu_inv: mu.inverse,
    };
}

fn algebroid_error(e: BialgebroidError) -> CatalogError {
    CatalogError::Build(e.to_string())
}

/// Functions on the 2-cells as a Hopf algebroid over functions on the objects:
/// `s(f_g) = Σ_{s(e)=g} f_e`, `t(f_g) = Σ_{t(e)=g} f_e`,
/// `▲(f_e) = Σ_{e₁•e₂=e} f_{e₁} ⊗_B f_{e₂}`, `ε(f_e) = f_g` if `e = id_g`,
/// full antipode `f_e ↦ f_{e⁻¹}` with the vertical inverse.
pub fn two_group_function_algebroid(t: &TwoGroupData) -> Result<Hopf2Algebra, CatalogError> {
    t.validate()?;
    let hopf = function_hopf_algebra(&t.g1);
    let base = function_hopf_algebra(&t.g0);
    let (n, m) = (hopf.dim(), base.dim());
    let space = hopf.space().clone();
    let sum_where =
        |pred: &dyn Fn(usize) -> bool| Vector::from_pairs(n, (0..n).filter(|&e| pred(e)).map(|e| (e, Scalar::one())));
    let source = LinearMap::from_fn(base.space(), &space, |g| sum_where(&|e| t.src[e] == g)).expect("shape");
    let target = LinearMap::from_fn(base.space(), &space, |g| sum_where(&|e| t.tgt[e] == g)).expect("shape");
    let coproduct = LinearMap::from_fn(&space, &space.tensor(&space), |e| {
        Vector::from_pairs(
            n * n,
            t.vert
                .iter()
                .filter(|(_, &c)| c == e)
                .map(|(&(e1, e2), _)| (e1 * n + e2, Scalar::one())),
        )
    })
    .expect("shape");
    let counit = LinearMap::from_fn(&space, base.space(), |e| match t.ident.iter().position(|&i| i == e) {
        Some(g) => Vector::basis(m, g),
        None => Vector::zeros(m),
    })
    .expect("shape");
    let full = LinearMap::from_fn(&space, &space, |e| {
        Vector::basis(n, t.vertical_inverse(e).expect("validated"))
    })
    .expect("shape");
    let algebroid = build_right_bialgebroid(hopf.algebra().clone(), base, source, target, coproduct, counit)
        .map_err(algebroid_error)?;
    let mut h2 = Hopf2Algebra {
        hopf,
        algebroid,
        canonical: CanonicalMaps::default(),
        full_antipode: Some(full),
        lambda_translation: None,
        mu_translation: None,
    };
    canonical_maps(&mut h2);
    Ok(h2)
}

/// The 2-cells as a groupoid algebra (`e · e' = e • e'` when composable, zero
/// otherwise) over functions on the objects, with `s(f_g) = t(f_g) = id_g`,
/// `▲(e) = e ⊗_B e`, `ε(e) = f_{t(e)}`, full antipode the vertical inverse,
/// and the grouplike coproduct `Δ(e) = e ⊗ e` with the horizontal inverse as
/// Hopf-side antipode.
pub fn remark_counterexample(t: &TwoGroupData) -> Result<Hopf2Algebra, CatalogError> {
    t.validate()?;
    let g1 = &t.g1;
    let n = g1.order();
    let base = function_hopf_algebra(&t.g0);
    let m = base.dim();
    let space = BasedSpace::new(g1.labels.clone()).expect("distinct labels");
    let unit = Vector::from_pairs(n, t.ident.iter().map(|&e| (e, Scalar::one())));
    let alg = Algebra::from_products(
        space.clone(),
        |a, b| match t.compose(a, b) {
            Some(c) => Vector::basis(n, c),
            None => Vector::zeros(n),
        },
        unit,
    )
    .expect("shape");
    let hopf = HopfData::from_fns(
        format!("k[{}]", group_name(g1)),
        alg.clone(),
        |e| Vector::basis(n * n, e * n + e),
        |_| Scalar::one(),
        Some(&mut |e| Vector::basis(n, g1.inv(e))),
    )
    .expect("shape");
    let ids = LinearMap::from_fn(base.space(), &space, |g| Vector::basis(n, t.ident[g])).expect("shape");
    let coproduct =
        LinearMap::from_fn(&space, &space.tensor(&space), |e| Vector::basis(n * n, e * n + e)).expect("shape");
    let counit = LinearMap::from_fn(&space, base.space(), |e| Vector::basis(m, t.tgt[e])).expect("shape");
    let full = LinearMap::from_fn(&space, &space, |e| {
        Vector::basis(n, t.vertical_inverse(e).expect("validated"))
    })
    .expect("shape");
    let algebroid = build_right_bialgebroid(alg, base, ids.clone(), ids, coproduct, counit).map_err(algebroid_error)?;
    let mut h2 = Hopf2Algebra {
        hopf,
        algebroid,
        canonical: CanonicalMaps::default(),
        full_antipode: Some(full),
        lambda_translation: None,
        mu_translation: None,
    };
    canonical_maps(&mut h2);
    Ok(h2)
}
