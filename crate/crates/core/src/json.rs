//! JSON encodings.
//!
//! A linear combination is `{"basis": "M" | "F" | "T", "terms": [{"coeff": "<decimal>", "key": ...}]}`
//! with terms in canonical order. Composition keys are arrays of entry
//! strings (`["e","2"]`), tensor keys are `{"head": "2", "tail": ["0","3"]}`,
//! and keys of tensor squares are two-element arrays.

use serde_json::{json, Value};

use crate::composition::Composition;
use crate::hopf::{Basis, Tensor2, WQSymElem};
use crate::lincomb::LinComb;
use crate::oracle::TruncSeries;
use crate::projection::KernelReport;
use crate::rota_baxter::{PureTensor, ShaElem};

pub fn composition(alpha: &Composition) -> Value {
    Value::Array(
        alpha
            .entries()
            .iter()
            .map(|e| Value::String(e.to_string()))
            .collect(),
    )
}

pub fn tensor(t: &PureTensor) -> Value {
    json!({
        "head": t.head.to_string(),
        "tail": t.tail.0.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn lincomb<K: Ord>(basis: &str, u: &LinComb<K>, key: impl Fn(&K) -> Value) -> Value {
    let terms: Vec<Value> = u
        .iter()
        .map(|(k, c)| json!({"coeff": c.to_string(), "key": key(k)}))
        .collect();
    json!({"basis": basis, "terms": terms})
}

fn pair<K>(key: impl Fn(&K) -> Value) -> impl Fn(&(K, K)) -> Value {
    move |(l, r)| Value::Array(vec![key(l), key(r)])
}

pub fn element(u: &WQSymElem) -> Value {
    lincomb(&u.basis.to_string(), &u.value, composition)
}

pub fn tensor2(basis: Basis, t: &Tensor2<Composition>) -> Value {
    lincomb(&basis.to_string(), t, pair(composition))
}

pub fn sha(u: &ShaElem) -> Value {
    lincomb("T", u, tensor)
}

pub fn sha_tensor2(t: &Tensor2<PureTensor>) -> Value {
    lincomb("T", t, pair(tensor))
}

/// `{"vars": n, "terms": [{"coeff": "1", "key": ["e","0","1"]}]}`.
pub fn series(u: &TruncSeries) -> Value {
    let terms: Vec<Value> = u
        .terms
        .iter()
        .map(|(e, c)| {
            let key: Vec<String> = e.0.iter().map(ToString::to_string).collect();
            json!({"coeff": c.to_string(), "key": key})
        })
        .collect();
    json!({"vars": u.nvars, "terms": terms})
}

pub fn kernel_report(r: &KernelReport) -> Value {
    json!({
        "max_len": r.max_len,
        "max_entry": r.max_entry,
        "span_dim": r.span_dim,
        "rank": r.rank,
        "kernel_dim": r.kernel_dim,
        "basis_count": r.basis_count,
        "basis_rank": r.basis_rank,
        "all_annihilated": r.all_annihilated,
        "passed": r.passed(),
    })
}
