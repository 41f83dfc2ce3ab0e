//! Self-test property suites over seeded random instances. Each suite
//! reports pass/fail counts; the run is deterministic for a given seed and
//! count.

use cliffa_core::clifford::{invariance_check, split_check, verify_deg2};
use cliffa_core::csa::{Antiaut, StructAlgebra};
use cliffa_core::exactmath::q_int;
use cliffa_core::forms::{clifford_form, BilinearForm};
use cliffa_core::tensor::EngineConfig;
use cliffa_core::QMatrix;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::oracle::classical_clifford;
use crate::rng;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub pass: usize,
    pub fail: usize,
}

impl SuiteResult {
    fn record(&mut self, ok: bool) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
        }
    }
}

fn suite(name: &str) -> SuiteResult {
    SuiteResult {
        name: name.to_string(),
        pass: 0,
        fail: 0,
    }
}

fn quaternion_algebras() -> Vec<StructAlgebra> {
    rng::QUATERNION_PAIRS
        .iter()
        .map(|&(a, b)| StructAlgebra::quaternion(q_int(a), q_int(b)).expect("nonzero parameters"))
        .collect()
}

/// σ(a) = a⁻¹, σ² = Int a, γ² = Id, γ(1) = a, and the triple-product
/// identity γ(xyz) = σ(z)·γ(y)·σ⁻¹(x) on random triples.
fn asymmetry_identities(seed: u64, count: usize) -> SuiteResult {
    let mut out = suite("asymmetry_identities");
    let mut r = rng::rng(seed ^ 0xa51d);
    let algebras = quaternion_algebras();
    for t in 0..count {
        let antiaut = if t % 2 == 0 {
            let alg = &algebras[t / 2 % algebras.len()];
            rng::gen_quaternion_antiaut(&mut r, alg, 3)
        } else {
            Antiaut::adjoint(&rng::gen_form(&mut r, 2, 5)).expect("plane form")
        };
        let alg = antiaut.algebra().clone();
        let a = antiaut.asymmetry().to_vec();
        let mut ok = true;
        // construction identities (also asserted at construction)
        ok &= antiaut.apply(&a) == alg.inverse(&a).expect("asymmetry invertible");
        let int_a = alg.int_w(&a).expect("asymmetry invertible");
        ok &= (antiaut.sigma() * antiaut.sigma()) == int_a;
        ok &= (antiaut.gamma() * antiaut.gamma()).is_identity();
        ok &= antiaut.gamma_apply(&alg.unit()) == a;
        let sigma_inv = antiaut.sigma().inverse().expect("σ bijective");
        for _ in 0..20 {
            let x: Vec<_> = (0..4).map(|_| q_int(rng::gen_int(&mut r, 3))).collect();
            let y: Vec<_> = (0..4).map(|_| q_int(rng::gen_int(&mut r, 3))).collect();
            let z: Vec<_> = (0..4).map(|_| q_int(rng::gen_int(&mut r, 3))).collect();
            let lhs = antiaut.gamma_apply(&alg.mul(&alg.mul(&x, &y), &z));
            let rhs = alg.mul(
                &alg.mul(&antiaut.apply(&z), &antiaut.gamma_apply(&y)),
                &sigma_inv.mul_vec(&x),
            );
            ok &= lhs == rhs;
        }
        out.record(ok);
    }
    out
}

/// a_ρ = w·a_σ·w⁻¹, γ_ρ∘Int w = Int w∘γ_σ, and equality of the computed
/// Clifford invariants for conjugate pairs.
fn conjugation_invariance(seed: u64, count: usize, cfg: &EngineConfig) -> SuiteResult {
    let mut out = suite("conjugation_invariance");
    let mut r = rng::rng(seed ^ 0xc0a7);
    let algebras = quaternion_algebras();
    for t in 0..count {
        let (antiaut, w) = if t % 2 == 0 {
            let alg = &algebras[t / 2 % algebras.len()];
            (
                rng::gen_quaternion_antiaut(&mut r, alg, 3),
                rng::gen_invertible(&mut r, alg, 3),
            )
        } else {
            let s = Antiaut::adjoint(&rng::gen_form(&mut r, 2, 5)).expect("plane form");
            let alg = s.algebra().clone();
            let w = rng::gen_invertible(&mut r, &alg, 3);
            (s, w)
        };
        let alg = antiaut.algebra().clone();
        let conj = antiaut.conjugate(&w).expect("w invertible");
        let w_inv = alg.inverse(&w).expect("w invertible");
        let expected_a = alg.mul(&alg.mul(&w, antiaut.asymmetry()), &w_inv);
        let int_w = alg.int_w(&w).expect("w invertible");
        let mut ok = conj.asymmetry() == expected_a.as_slice();
        ok &= (conj.gamma() * &int_w) == (&int_w * antiaut.gamma());
        ok &= invariance_check(&antiaut, &w, cfg).unwrap_or(false);
        out.record(ok);
    }
    out
}

/// The degree-2 closed form: verify_deg2's match flag on random instances
/// from both construction families.
fn deg2_verification(seed: u64, count: usize, cfg: &EngineConfig) -> SuiteResult {
    let mut out = suite("deg2_verification");
    let mut r = rng::rng(seed ^ 0xde62);
    let algebras = quaternion_algebras();
    for t in 0..count {
        let antiaut = if t % 2 == 0 {
            let alg = &algebras[t / 2 % algebras.len()];
            rng::gen_quaternion_antiaut(&mut r, alg, 3)
        } else {
            Antiaut::adjoint(&rng::gen_form(&mut r, 2, 5)).expect("plane form")
        };
        match verify_deg2(&antiaut, cfg, "random instance") {
            Ok(report) => out.record(report.matches),
            Err(_) => out.record(false),
        }
    }
    out
}

/// Split-case identification for random plane forms.
fn split_checks(seed: u64, count: usize, cfg: &EngineConfig) -> SuiteResult {
    let mut out = suite("split_checks");
    let mut r = rng::rng(seed ^ 0x5b17);
    for _ in 0..count {
        let f = rng::gen_form(&mut r, 2, 5);
        match split_check(&f, cfg) {
            Ok(report) => out.record(report.passed()),
            Err(_) => out.record(false),
        }
    }
    out
}

/// Structure constants of C(V,b) for symmetric forms against the
/// independent rewriting oracle.
fn classical_oracle(seed: u64, count: usize, cfg: &EngineConfig) -> SuiteResult {
    let mut out = suite("classical_oracle");
    let mut r = rng::rng(seed ^ 0x0c1e);
    for t in 0..count {
        let n = 2 + t % 2;
        let f = rng::gen_symmetric_form(&mut r, n, 4);
        let ok = match clifford_form(&f, &EngineConfig::for_alphabet(n).max_caps(cfg)) {
            Ok(engine) => {
                let oracle = classical_clifford(&f);
                engine.dim() == oracle.basis.len()
                    && (0..engine.dim()).all(|i| {
                        (0..engine.dim()).all(|j| {
                            engine.structure_constant(i, j) == oracle.table[i][j].as_slice()
                        })
                    })
                    && engine
                        .basis()
                        .iter()
                        .zip(&oracle.basis)
                        .all(|(w, o)| w.letters().collect::<Vec<_>>() == *o)
            }
            Err(_) => false,
        };
        out.record(ok);
    }
    out
}

/// Build tables and re-certify associativity; with `inject_fault` one table
/// entry is corrupted first, so the suite must fail (negative control).
fn associativity(seed: u64, count: usize, cfg: &EngineConfig, inject_fault: bool) -> SuiteResult {
    let mut out = suite("associativity");
    let mut r = rng::rng(seed ^ 0xa550);
    if inject_fault {
        // negative control: a corrupted structure-constant table must be
        // rejected; the identity form guarantees a 4-dimensional table
        let f = BilinearForm::new(QMatrix::identity(2)).expect("identity form");
        let algebra = clifford_form(&f, cfg).expect("classical quotient");
        let mut corrupted: Vec<Vec<Vec<_>>> = (0..algebra.dim())
            .map(|i| {
                (0..algebra.dim())
                    .map(|j| algebra.structure_constant(i, j).to_vec())
                    .collect()
            })
            .collect();
        corrupted[3][3][0] += q_int(1);
        out.record(table_is_associative(&corrupted));
    }
    for _ in 0..count {
        let f = rng::gen_form(&mut r, 2, 4);
        let Ok(algebra) = clifford_form(&f, cfg) else {
            out.record(false);
            continue;
        };
        let constants: Vec<Vec<Vec<_>>> = (0..algebra.dim())
            .map(|i| {
                (0..algebra.dim())
                    .map(|j| algebra.structure_constant(i, j).to_vec())
                    .collect()
            })
            .collect();
        out.record(table_is_associative(&constants) && algebra.verify_table());
    }
    out
}

fn table_is_associative(table: &[Vec<Vec<cliffa_core::Rational>>]) -> bool {
    let dim = table.len();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let mut lhs = vec![cliffa_core::Rational::zero(); dim];
                for (r, c) in table[i][j].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (s, t) in table[r][k].iter().enumerate() {
                        lhs[s] += c * t;
                    }
                }
                let mut rhs = vec![cliffa_core::Rational::zero(); dim];
                for (r, c) in table[j][k].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (s, t) in table[i][r].iter().enumerate() {
                        rhs[s] += c * t;
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Extension of a base config to at least the caps of another.
trait MaxCaps {
    fn max_caps(self, other: &EngineConfig) -> EngineConfig;
}

impl MaxCaps for EngineConfig {
    fn max_caps(mut self, other: &EngineConfig) -> EngineConfig {
        self.degree_cap = self.degree_cap.max(other.degree_cap);
        self.slack_cap = self.slack_cap.max(other.slack_cap);
        self
    }
}

/// Run all suites. Deterministic in (seed, count).
pub fn run_all(seed: u64, count: usize, inject_fault: bool) -> Vec<SuiteResult> {
    let cfg = EngineConfig::for_alphabet(4);
    vec![
        asymmetry_identities(seed, count),
        conjugation_invariance(seed, count, &cfg),
        deg2_verification(seed, count, &cfg),
        split_checks(seed, count, &cfg),
        classical_oracle(seed, count.min(20), &cfg),
        associativity(seed, count.min(20), &cfg, inject_fault),
    ]
}

pub fn all_passed(results: &[SuiteResult]) -> bool {
    results.iter().all(|r| r.fail == 0)
}
