//! Brute-force evaluator working directly on exported structure constants.
//!
//! Elements are maps from basis multi-indices to rationals; every identity is
//! expanded term by term. Nothing here touches the engine's linear algebra.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

pub type Q = BigRational;
/// A tensor: multi-index to coefficient, zeros never stored.
pub type T = BTreeMap<Vec<usize>, Q>;
type El = Vec<(usize, Q)>;

pub fn q(text: &str) -> Q {
    Q::from_str(text).unwrap_or_else(|_| panic!("bad rational {text:?}"))
}

fn add(t: &mut T, key: Vec<usize>, c: Q) {
    if c.is_zero() {
        return;
    }
    let slot = t.entry(key.clone()).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        t.remove(&key);
    }
}

fn tensor1(x: &El) -> T {
    let mut t = T::new();
    for (i, c) in x {
        add(&mut t, vec![*i], c.clone());
    }
    t
}

fn scalar(c: Q) -> T {
    let mut t = T::new();
    add(&mut t, vec![], c);
    t
}

fn entries(v: &Value) -> Vec<Vec<Value>> {
    v.as_array()
        .map(|a| a.iter().map(|e| e.as_array().expect("entry array").clone()).collect())
        .unwrap_or_default()
}

fn idx(v: &Value) -> usize {
    v.as_u64().expect("index") as usize
}

fn coeff(v: &Value) -> Q {
    q(v.as_str().expect("coefficient string"))
}

#[derive(Clone, Debug)]
pub struct Hopf {
    pub n: usize,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<El>>,
    pub unit: El,
    pub comult: Vec<Vec<(usize, usize, Q)>>,
    pub counit: Vec<Q>,
    pub antipode: Option<Vec<El>>,
}

fn map1(n: usize, v: &Value) -> Vec<El> {
    let mut out = vec![Vec::new(); n];
    for e in entries(v) {
        out[idx(&e[0])].push((idx(&e[1]), coeff(&e[2])));
    }
    out
}

impl Hopf {
    pub fn from_json(v: &Value) -> Hopf {
        let labels: Vec<String> = v["basis"]
            .as_array()
            .expect("basis")
            .iter()
            .map(|l| l.as_str().expect("label").to_string())
            .collect();
        let n = labels.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for e in entries(&v["mult"]) {
            mult[idx(&e[0])][idx(&e[1])].push((idx(&e[2]), coeff(&e[3])));
        }
        let unit = entries(&v["unit"]).iter().map(|e| (idx(&e[0]), coeff(&e[1]))).collect();
        let mut comult = vec![Vec::new(); n];
        for e in entries(&v["comult"]) {
            comult[idx(&e[0])].push((idx(&e[1]), idx(&e[2]), coeff(&e[3])));
        }
        let mut counit = vec![Q::zero(); n];
        for e in entries(&v["counit"]) {
            counit[idx(&e[0])] = coeff(&e[1]);
        }
        let antipode = v.get("antipode").filter(|a| !a.is_null()).map(|a| map1(n, a));
        Hopf {
            n,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        }
    }

    pub fn mul(&self, x: &El, y: &El) -> El {
        let mut acc = T::new();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in &self.mult[*i][*j] {
                    add(&mut acc, vec![*k], a * b * c);
                }
            }
        }
        acc.into_iter().map(|(k, c)| (k[0], c)).collect()
    }

    pub fn s(&self, x: &El) -> El {
        let s = self.antipode.as_ref().expect("antipode");
        let mut acc = T::new();
        for (i, a) in x {
            for (k, c) in &s[*i] {
                add(&mut acc, vec![*k], a * c);
            }
        }
        acc.into_iter().map(|(k, c)| (k[0], c)).collect()
    }

    pub fn e(&self, i: usize) -> El {
        vec![(i, Q::one())]
    }

    /// Iterated coproduct terms `(h₁, …, h_k)` of a basis element.
    pub fn sweedler(&self, i: usize, legs: usize) -> Vec<(Vec<usize>, Q)> {
        let mut terms = vec![(vec![i], Q::one())];
        for _ in 1..legs {
            let mut next = Vec::new();
            for (idx, c) in terms {
                let last = *idx.last().expect("nonempty");
                for (p, r, d) in &self.comult[last] {
                    let mut k = idx[..idx.len() - 1].to_vec();
                    k.push(*p);
                    k.push(*r);
                    next.push((k, &c * d));
                }
            }
            terms = next;
        }
        terms
    }

    pub fn counit_of(&self, x: &El) -> Q {
        x.iter().fold(Q::zero(), |acc, (i, c)| acc + c * &self.counit[*i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    pub failures: usize,
}

fn count(dims: &[usize], f: impl Fn(&[usize]) -> (T, T)) -> Verdict {
    let total: usize = dims.iter().product();
    let mut failures = 0;
    let mut t = vec![0; dims.len()];
    for flat in 0..total {
        let mut r = flat;
        for k in (0..dims.len()).rev() {
            t[k] = r % dims[k];
            r /= dims[k];
        }
        let (lhs, rhs) = f(&t);
        if lhs != rhs {
            failures += 1;
        }
    }
    Verdict {
        checked: total,
        failures,
    }
}

pub fn hopf_axioms(h: &Hopf) -> Vec<(&'static str, Verdict)> {
    let n = h.n;
    let mut out = Vec::new();
    out.push((
        "algebra.associativity",
        count(&[n, n, n], |t| {
            let left = h.mul(&h.mul(&h.e(t[0]), &h.e(t[1])), &h.e(t[2]));
            let right = h.mul(&h.e(t[0]), &h.mul(&h.e(t[1]), &h.e(t[2])));
            (tensor1(&left), tensor1(&right))
        }),
    ));
    out.push((
        "algebra.left-unit",
        count(&[n], |t| (tensor1(&h.mul(&h.unit, &h.e(t[0]))), tensor1(&h.e(t[0])))),
    ));
    out.push((
        "algebra.right-unit",
        count(&[n], |t| (tensor1(&h.mul(&h.e(t[0]), &h.unit)), tensor1(&h.e(t[0])))),
    ));
    out.push((
        "coalgebra.coassociativity",
        count(&[n], |t| {
            let mut lhs = T::new();
            let mut rhs = T::new();
            for (a, b, c) in &h.comult[t[0]] {
                for (p, r, d) in &h.comult[*a] {
                    add(&mut lhs, vec![*p, *r, *b], c * d);
                }
                for (p, r, d) in &h.comult[*b] {
                    add(&mut rhs, vec![*a, *p, *r], c * d);
                }
            }
            (lhs, rhs)
        }),
    ));
    for (id, left) in [("coalgebra.left-counit", true), ("coalgebra.right-counit", false)] {
        out.push((
            id,
            count(&[n], |t| {
                let mut lhs = T::new();
                for (a, b, c) in &h.comult[t[0]] {
                    let (keep, drop) = if left { (*b, *a) } else { (*a, *b) };
                    add(&mut lhs, vec![keep], c * &h.counit[drop]);
                }
                (lhs, tensor1(&h.e(t[0])))
            }),
        ));
    }
    out.push((
        "bialgebra.comult-multiplicative",
        count(&[n, n], |t| {
            let mut lhs = T::new();
            for (k, c) in h.mul(&h.e(t[0]), &h.e(t[1])) {
                for (p, r, d) in &h.comult[k] {
                    add(&mut lhs, vec![*p, *r], &c * d);
                }
            }
            let mut rhs = T::new();
            for (p, r, c) in &h.comult[t[0]] {
                for (u, v, d) in &h.comult[t[1]] {
                    for (x, cx) in h.mul(&h.e(*p), &h.e(*u)) {
                        for (y, cy) in h.mul(&h.e(*r), &h.e(*v)) {
                            add(&mut rhs, vec![x, y], c * d * &cx * cy);
                        }
                    }
                }
            }
            (lhs, rhs)
        }),
    ));
    out.push((
        "bialgebra.comult-unit",
        count(&[], |_| {
            let mut lhs = T::new();
            for (k, c) in &h.unit {
                for (p, r, d) in &h.comult[*k] {
                    add(&mut lhs, vec![*p, *r], c * d);
                }
            }
            let mut rhs = T::new();
            for (i, a) in &h.unit {
                for (j, b) in &h.unit {
                    add(&mut rhs, vec![*i, *j], a * b);
                }
            }
            (lhs, rhs)
        }),
    ));
    out.push((
        "bialgebra.counit-multiplicative",
        count(&[n, n], |t| {
            let lhs = h.counit_of(&h.mul(&h.e(t[0]), &h.e(t[1])));
            (scalar(lhs), scalar(&h.counit[t[0]] * &h.counit[t[1]]))
        }),
    ));
    out.push((
        "bialgebra.counit-unit",
        count(&[], |_| (scalar(h.counit_of(&h.unit)), scalar(Q::one()))),
    ));
    for (id, left) in [("hopf.antipode-left", true), ("hopf.antipode-right", false)] {
        out.push((
            id,
            count(&[n], |t| {
                let mut lhs = T::new();
                for (a, b, c) in &h.comult[t[0]] {
                    let term = if left {
                        h.mul(&h.s(&h.e(*a)), &h.e(*b))
                    } else {
                        h.mul(&h.e(*a), &h.s(&h.e(*b)))
                    };
                    for (k, d) in term {
                        add(&mut lhs, vec![k], c * d);
                    }
                }
                let rhs: El = h.unit.iter().map(|(k, u)| (*k, u * &h.counit[t[0]])).collect();
                (lhs, tensor1(&rhs))
            }),
        ));
    }
    out
}

/// Right action `B⊗A → B` and left coaction `A → B⊗A` between two Hopf algebras.
#[derive(Clone, Debug)]
pub struct Matched {
    pub a: Hopf,
    pub b: Hopf,
    /// `action[b][a]` is `b ◁ a`.
    pub action: Vec<Vec<El>>,
    /// `coaction[a]` lists `(b, a′, c)` for `δ(a) ∋ c b⊗a′`.
    pub coaction: Vec<Vec<(usize, usize, Q)>>,
    pub phi: Option<Vec<El>>,
}

impl Matched {
    pub fn from_json(v: &Value) -> Matched {
        let a = Hopf::from_json(&v["a"]);
        let b = Hopf::from_json(&v["b"]);
        let mut action = vec![vec![Vec::new(); a.n]; b.n];
        for e in entries(&v["action"]) {
            action[idx(&e[0])][idx(&e[1])].push((idx(&e[2]), coeff(&e[3])));
        }
        let mut coaction = vec![Vec::new(); a.n];
        for e in entries(&v["coaction"]) {
            coaction[idx(&e[0])].push((idx(&e[1]), idx(&e[2]), coeff(&e[3])));
        }
        let phi = v.get("phi").filter(|p| !p.is_null()).map(|p| map1(b.n, p));
        Matched {
            a,
            b,
            action,
            coaction,
            phi,
        }
    }

    fn act(&self, x: &El, a: usize) -> El {
        let mut acc = T::new();
        for (i, c) in x {
            for (k, d) in &self.action[*i][a] {
                add(&mut acc, vec![*k], c * d);
            }
        }
        acc.into_iter().map(|(k, c)| (k[0], c)).collect()
    }

    fn act_el(&self, x: &El, y: &El) -> El {
        let mut acc = T::new();
        for (j, c) in y {
            for (k, d) in self.act(x, *j) {
                add(&mut acc, vec![k], c * d);
            }
        }
        acc.into_iter().map(|(k, c)| (k[0], c)).collect()
    }

    fn phi_of(&self, i: usize) -> El {
        self.phi.as_ref().expect("phi")[i].clone()
    }

    fn phi_el(&self, x: &El) -> El {
        let mut acc = T::new();
        for (i, c) in x {
            for (k, d) in self.phi_of(*i) {
                add(&mut acc, vec![k], c * d);
            }
        }
        acc.into_iter().map(|(k, c)| (k[0], c)).collect()
    }

    /// `Δ_B(b◁a) = (b₁◁a₁) a₂^{[-1]} ⊗ b₂◁a₂^{[0]}` on pairs `(a, b)`.
    pub fn compat_iii(&self) -> Verdict {
        let (a, b) = (&self.a, &self.b);
        count(&[a.n, b.n], |t| {
            let mut lhs = T::new();
            for (k, c) in self.act(&b.e(t[1]), t[0]) {
                for (p, r, d) in &b.comult[k] {
                    add(&mut lhs, vec![*p, *r], &c * d);
                }
            }
            let mut rhs = T::new();
            for (b1, b2, cb) in &b.comult[t[1]] {
                for (a1, a2, ca) in &a.comult[t[0]] {
                    for (h, az, cd) in &self.coaction[*a2] {
                        let first = b.mul(&self.act(&b.e(*b1), *a1), &b.e(*h));
                        for (x, cx) in &first {
                            for (y, cy) in self.act(&b.e(*b2), *az) {
                                add(&mut rhs, vec![*x, y], cb * ca * cd * cx * cy);
                            }
                        }
                    }
                }
            }
            (lhs, rhs)
        })
    }

    /// `a₁^{[-1]}(b◁a₂) ⊗ a₁^{[0]} = (b◁a₁) a₂^{[-1]} ⊗ a₂^{[0]}` on pairs `(a, b)`.
    pub fn compat_iv(&self) -> Verdict {
        let (a, b) = (&self.a, &self.b);
        count(&[a.n, b.n], |t| {
            let mut lhs = T::new();
            let mut rhs = T::new();
            for (a1, a2, ca) in &a.comult[t[0]] {
                for (h, az, cd) in &self.coaction[*a1] {
                    for (x, cx) in b.mul(&b.e(*h), &self.act(&b.e(t[1]), *a2)) {
                        add(&mut lhs, vec![x, *az], ca * cd * cx);
                    }
                }
                for (h, az, cd) in &self.coaction[*a2] {
                    for (x, cx) in b.mul(&self.act(&b.e(t[1]), *a1), &b.e(*h)) {
                        add(&mut rhs, vec![x, *az], ca * cd * cx);
                    }
                }
            }
            (lhs, rhs)
        })
    }

    /// The four Peiffer conditions. The two involving `S⁻¹` are compared after
    /// applying `S` to the `A` leg, which is equivalent for bijective `S`.
    pub fn peiffer(&self) -> Vec<(&'static str, Verdict)> {
        let (a, b) = (&self.a, &self.b);
        let cond1 = count(&[b.n], |t| {
            let mut lhs = T::new();
            for (i, c) in self.phi_of(t[0]) {
                for (h, az, d) in &self.coaction[i] {
                    add(&mut lhs, vec![*h, *az], &c * d);
                }
            }
            let mut rhs = T::new();
            for (k, c) in b.sweedler(t[0], 3) {
                for (x, cx) in b.mul(&b.e(k[0]), &b.s(&b.e(k[2]))) {
                    for (y, cy) in self.phi_of(k[1]) {
                        add(&mut rhs, vec![x, y], &c * &cx * cy);
                    }
                }
            }
            (lhs, rhs)
        });
        let cond2 = count(&[a.n], |t| {
            let mut lhs = T::new();
            for (h, az, c) in &self.coaction[t[0]] {
                for (x, cx) in a.s(&self.phi_of(*h)) {
                    add(&mut lhs, vec![x, *az], c * cx);
                }
            }
            let mut rhs = T::new();
            for (k, c) in a.sweedler(t[0], 3) {
                for (x, cx) in a.mul(&a.s(&a.e(k[0])), &a.e(k[2])) {
                    add(&mut rhs, vec![x, k[1]], &c * cx);
                }
            }
            (lhs, rhs)
        });
        let cond3 = count(&[b.n, a.n], |t| {
            let lhs = a.s(&self.phi_el(&self.act(&b.e(t[0]), t[1])));
            let mut rhs = T::new();
            for (a1, a2, c) in &a.comult[t[1]] {
                let left = a.mul(&a.s(&a.e(*a1)), &a.s(&self.phi_of(t[0])));
                for (x, cx) in a.mul(&left, &a.e(*a2)) {
                    add(&mut rhs, vec![x], c * cx);
                }
            }
            (tensor1(&lhs), rhs)
        });
        let cond4 = count(&[b.n, b.n], |t| {
            let lhs = self.act_el(&b.e(t[1]), &self.phi_of(t[0]));
            let mut rhs = T::new();
            for (b1, b2, c) in &b.comult[t[0]] {
                let left = b.mul(&b.e(*b1), &b.e(t[1]));
                for (x, cx) in b.mul(&left, &b.s(&b.e(*b2))) {
                    add(&mut rhs, vec![x], c * cx);
                }
            }
            (tensor1(&lhs), rhs)
        });
        vec![
            ("peiffer.cond-1", cond1),
            ("peiffer.cond-2", cond2),
            ("peiffer.cond-3", cond3),
            ("peiffer.cond-4", cond4),
        ]
    }

    /// The bicrossproduct on `a⊗b ↦ a·n_B + b`, with the antipode obtained as
    /// `(1⊗S(a^{[-1]}b))(S(a^{[0]})⊗1)` through the product itself.
    pub fn product(&self) -> Hopf {
        let (a, b) = (&self.a, &self.b);
        let nb = b.n;
        let n = a.n * nb;
        let pack = |i: usize, j: usize| i * nb + j;
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (ia, ib) in (0..a.n).flat_map(|i| (0..nb).map(move |j| (i, j))) {
            for (ja, jb) in (0..a.n).flat_map(|i| (0..nb).map(move |j| (i, j))) {
                let mut acc = T::new();
                for (p, r, c) in &a.comult[ja] {
                    for (x, cx) in a.mul(&a.e(ia), &a.e(*p)) {
                        for (y, cy) in b.mul(&self.act(&b.e(ib), *r), &b.e(jb)) {
                            add(&mut acc, vec![pack(x, y)], c * &cx * cy);
                        }
                    }
                }
                mult[pack(ia, ib)][pack(ja, jb)] = acc.into_iter().map(|(k, c)| (k[0], c)).collect();
            }
        }
        let mut unit = Vec::new();
        for (i, c) in &a.unit {
            for (j, d) in &b.unit {
                unit.push((pack(*i, *j), c * d));
            }
        }
        let mut comult = vec![Vec::new(); n];
        let mut counit = vec![Q::zero(); n];
        for ia in 0..a.n {
            for ib in 0..nb {
                let mut acc = T::new();
                for (a1, a2, ca) in &a.comult[ia] {
                    for (h, az, cd) in &self.coaction[*a2] {
                        for (b1, b2, cb) in &b.comult[ib] {
                            for (y, cy) in b.mul(&b.e(*h), &b.e(*b1)) {
                                add(&mut acc, vec![pack(*a1, y), pack(*az, *b2)], ca * cd * cb * cy);
                            }
                        }
                    }
                }
                comult[pack(ia, ib)] = acc.into_iter().map(|(k, c)| (k[0], k[1], c)).collect();
                counit[pack(ia, ib)] = &a.counit[ia] * &b.counit[ib];
            }
        }
        let mut h = Hopf {
            n,
            labels: (0..n)
                .map(|k| format!("{}⊗{}", a.labels[k / nb], b.labels[k % nb]))
                .collect(),
            mult,
            unit,
            comult,
            counit,
            antipode: None,
        };
        if a.antipode.is_some() && b.antipode.is_some() {
            let a_unit = a.unit.clone();
            let b_unit = b.unit.clone();
            let lift_b = |y: &El| -> El {
                let mut v = Vec::new();
                for (i, c) in &a_unit {
                    for (j, d) in y {
                        v.push((pack(*i, *j), c * d));
                    }
                }
                v
            };
            let lift_a = |x: &El| -> El {
                let mut v = Vec::new();
                for (i, c) in x {
                    for (j, d) in &b_unit {
                        v.push((pack(*i, *j), c * d));
                    }
                }
                v
            };
            let mut antipode = vec![Vec::new(); n];
            for ia in 0..a.n {
                for ib in 0..nb {
                    let mut acc = T::new();
                    for (hb, az, c) in &self.coaction[ia] {
                        let left = lift_b(&b.s(&b.mul(&b.e(*hb), &b.e(ib))));
                        let right = lift_a(&a.s(&a.e(*az)));
                        for (k, d) in h.mul(&left, &right) {
                            add(&mut acc, vec![k], c * d);
                        }
                    }
                    antipode[pack(ia, ib)] = acc.into_iter().map(|(k, c)| (k[0], c)).collect();
                }
            }
            h.antipode = Some(antipode);
        }
        h
    }
}

/// Structure constants of two Hopf algebras agree exactly, labels included.
pub fn same_constants(x: &Hopf, y: &Hopf) -> bool {
    let norm1 = |v: &[El]| -> Vec<T> { v.iter().map(tensor1).collect() };
    let norm_c = |v: &[Vec<(usize, usize, Q)>]| -> Vec<T> {
        v.iter()
            .map(|terms| {
                let mut t = T::new();
                for (p, r, c) in terms {
                    add(&mut t, vec![*p, *r], c.clone());
                }
                t
            })
            .collect()
    };
    x.labels == y.labels
        && x.mult.iter().map(|r| norm1(r)).collect::<Vec<_>>() == y.mult.iter().map(|r| norm1(r)).collect::<Vec<_>>()
        && tensor1(&x.unit) == tensor1(&y.unit)
        && norm_c(&x.comult) == norm_c(&y.comult)
        && x.counit == y.counit
        && x.antipode.as_deref().map(norm1) == y.antipode.as_deref().map(norm1)
}

pub fn apply(m: &[El], x: &El) -> El {
    let mut acc = T::new();
    for (i, c) in x {
        for (k, d) in &m[*i] {
            add(&mut acc, vec![*k], c * d);
        }
    }
    acc.into_iter().map(|(k, c)| (k[0], c)).collect()
}

pub fn map_from_json(n: usize, v: &Value) -> Vec<El> {
    map1(n, v)
}
