//! JSON document formats.
//!
//! Rationals are strings ("p/q" or "p"), matrices are row-major arrays of
//! rows, and bracket/action/cocycle tensors are sparse lists of
//! `[i, j, [rationals]]` entries where omitted pairs are zero. Unknown keys
//! are rejected everywhere.

use serde::{Deserialize, Serialize};

use crate::algebra::BiHomLieAlgebra;
use crate::cohomology::CohomologyResult;
use crate::ext::{Section, ShortExactSequence, SplitExtensionData};
use crate::linalg::{format_rat, parse_rat, vec_is_zero, zero_vec, Matrix, Rat};
use crate::rep::{ActionPair, Axiom2Reading, BiHomModule, Cochain2};
use crate::{Error, Result};

pub type MatrixDoc = Vec<Vec<String>>;
/// One sparse tensor entry: indices plus a value vector.
pub type SparseEntry = (usize, usize, Vec<String>);

pub fn matrix_to_doc(m: &Matrix) -> MatrixDoc {
    m.row_vectors()
        .iter()
        .map(|row| row.iter().map(format_rat).collect())
        .collect()
}

pub fn matrix_from_doc(doc: &[Vec<String>]) -> Result<Matrix> {
    let rows = doc
        .iter()
        .map(|row| row.iter().map(|s| parse_rat(s)).collect::<Result<Vec<Rat>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn vec_to_doc(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn vec_from_doc(doc: &[String], expect: usize, what: &str) -> Result<Vec<Rat>> {
    if doc.len() != expect {
        return Err(Error::Parse(format!(
            "{what}: expected a vector of length {expect}, got {}",
            doc.len()
        )));
    }
    doc.iter().map(|s| parse_rat(s)).collect()
}

/// Sparse encoding of a (rows × cols → value_dim) tensor; zero values are
/// omitted and entries are emitted in row-major index order.
pub fn tensor_to_sparse(tensor: &[Vec<Vec<Rat>>]) -> Vec<SparseEntry> {
    let mut out = Vec::new();
    for (i, row) in tensor.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !vec_is_zero(v) {
                out.push((i, j, vec_to_doc(v)));
            }
        }
    }
    out
}

pub fn tensor_from_sparse(
    entries: &[SparseEntry],
    rows: usize,
    cols: usize,
    value_dim: usize,
    what: &str,
) -> Result<Vec<Vec<Vec<Rat>>>> {
    let mut tensor = vec![vec![zero_vec(value_dim); cols]; rows];
    for (i, j, v) in entries {
        if *i >= rows || *j >= cols {
            return Err(Error::Parse(format!(
                "{what}: index ({i},{j}) out of range for a {rows}x{cols} tensor"
            )));
        }
        tensor[*i][*j] = vec_from_doc(v, value_dim, what)?;
    }
    Ok(tensor)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dim: usize,
    pub bracket: Vec<SparseEntry>,
    pub alpha: MatrixDoc,
    pub beta: MatrixDoc,
}

pub fn algebra_to_doc(l: &BiHomLieAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        name: l.name().to_string(),
        dim: l.dim(),
        bracket: tensor_to_sparse(l.bracket_tensor()),
        alpha: matrix_to_doc(l.alpha()),
        beta: matrix_to_doc(l.beta()),
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<BiHomLieAlgebra> {
    let n = doc.dim;
    let bracket = tensor_from_sparse(&doc.bracket, n, n, n, "bracket")?;
    BiHomLieAlgebra::new(
        doc.name.clone(),
        n,
        bracket,
        matrix_from_doc(&doc.alpha)?,
        matrix_from_doc(&doc.beta)?,
    )
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub dim: usize,
    pub alpha_v: MatrixDoc,
    pub beta_v: MatrixDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDoc {
    pub module: ModuleDoc,
    pub lambda_l: Vec<SparseEntry>,
    pub lambda_r: Vec<SparseEntry>,
}

pub fn representation_to_doc(module: &BiHomModule, act: &ActionPair) -> RepresentationDoc {
    RepresentationDoc {
        module: ModuleDoc {
            dim: module.dim(),
            alpha_v: matrix_to_doc(module.alpha_v()),
            beta_v: matrix_to_doc(module.beta_v()),
        },
        lambda_l: tensor_to_sparse(act.lambda_l()),
        lambda_r: tensor_to_sparse(act.lambda_r()),
    }
}

pub fn representation_from_doc(
    doc: &RepresentationDoc,
    algebra_dim: usize,
) -> Result<(BiHomModule, ActionPair)> {
    let m = doc.module.dim;
    let module = BiHomModule::new(
        m,
        matrix_from_doc(&doc.module.alpha_v)?,
        matrix_from_doc(&doc.module.beta_v)?,
    )?;
    let lambda_l = tensor_from_sparse(&doc.lambda_l, algebra_dim, m, m, "lambda_l")?;
    let lambda_r = tensor_from_sparse(&doc.lambda_r, m, algebra_dim, m, "lambda_r")?;
    let act = ActionPair::new(algebra_dim, m, lambda_l, lambda_r)?;
    Ok((module, act))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cochain2Doc {
    pub theta: Vec<SparseEntry>,
}

pub fn cochain2_to_doc(c: &Cochain2) -> Cochain2Doc {
    Cochain2Doc {
        theta: tensor_to_sparse(c.tensor()),
    }
}

pub fn cochain2_from_doc(
    doc: &Cochain2Doc,
    algebra_dim: usize,
    module_dim: usize,
) -> Result<Cochain2> {
    let tensor = tensor_from_sparse(&doc.theta, algebra_dim, algebra_dim, module_dim, "theta")?;
    Cochain2::new(algebra_dim, module_dim, tensor)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    #[serde(rename = "V")]
    pub v: AlgebraDoc,
    #[serde(rename = "M")]
    pub m: AlgebraDoc,
    #[serde(rename = "L")]
    pub l: AlgebraDoc,
    pub i: MatrixDoc,
    pub pi: MatrixDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<MatrixDoc>,
}

pub fn extension_to_doc(e: &ShortExactSequence, section: Option<&Section>) -> ExtensionDoc {
    ExtensionDoc {
        v: algebra_to_doc(&e.v),
        m: algebra_to_doc(&e.m),
        l: algebra_to_doc(&e.l),
        i: matrix_to_doc(&e.i),
        pi: matrix_to_doc(&e.pi),
        section: section.map(|s| matrix_to_doc(&s.matrix)),
    }
}

pub fn extension_from_doc(doc: &ExtensionDoc) -> Result<(ShortExactSequence, Option<Section>)> {
    let e = ShortExactSequence {
        v: algebra_from_doc(&doc.v)?,
        m: algebra_from_doc(&doc.m)?,
        l: algebra_from_doc(&doc.l)?,
        i: matrix_from_doc(&doc.i)?,
        pi: matrix_from_doc(&doc.pi)?,
    };
    let section = doc
        .section
        .as_ref()
        .map(|s| Ok::<_, Error>(Section { matrix: matrix_from_doc(s)? }))
        .transpose()?;
    Ok((e, section))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohomologyDoc {
    #[serde(rename = "dim_Z2")]
    pub dim_z2: usize,
    #[serde(rename = "dim_B2")]
    pub dim_b2: usize,
    #[serde(rename = "dim_H2")]
    pub dim_h2: usize,
    pub z2_basis: Vec<Vec<SparseEntry>>,
    pub b2_basis: Vec<Vec<SparseEntry>>,
    pub representatives: Vec<Vec<SparseEntry>>,
}

pub fn cohomology_to_doc(
    result: &CohomologyResult,
    algebra_dim: usize,
    module_dim: usize,
) -> Result<CohomologyDoc> {
    let basis_docs = |basis: &[Vec<Rat>]| -> Result<Vec<Vec<SparseEntry>>> {
        basis
            .iter()
            .map(|flat| {
                let c = Cochain2::from_flat(algebra_dim, module_dim, flat)?;
                Ok(tensor_to_sparse(c.tensor()))
            })
            .collect()
    };
    Ok(CohomologyDoc {
        dim_z2: result.z2.dim(),
        dim_b2: result.b2.dim(),
        dim_h2: result.h2_dim,
        z2_basis: basis_docs(result.z2.vectors())?,
        b2_basis: basis_docs(result.b2.vectors())?,
        representatives: result
            .representatives
            .iter()
            .map(|c| tensor_to_sparse(c.tensor()))
            .collect(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitDataDoc {
    #[serde(rename = "L")]
    pub l: AlgebraDoc,
    pub module: ModuleDoc,
    pub lambda_l: Vec<SparseEntry>,
    pub lambda_r: Vec<SparseEntry>,
    pub theta: Vec<SparseEntry>,
    pub mu: Vec<SparseEntry>,
}

pub fn split_data_to_doc(data: &SplitExtensionData) -> SplitDataDoc {
    SplitDataDoc {
        l: algebra_to_doc(&data.l),
        module: ModuleDoc {
            dim: data.module.dim(),
            alpha_v: matrix_to_doc(data.module.alpha_v()),
            beta_v: matrix_to_doc(data.module.beta_v()),
        },
        lambda_l: tensor_to_sparse(data.act.lambda_l()),
        lambda_r: tensor_to_sparse(data.act.lambda_r()),
        theta: tensor_to_sparse(data.theta.tensor()),
        mu: tensor_to_sparse(&data.mu),
    }
}

pub fn split_data_from_doc(doc: &SplitDataDoc) -> Result<SplitExtensionData> {
    let l = algebra_from_doc(&doc.l)?;
    let n = l.dim();
    let m = doc.module.dim;
    let module = BiHomModule::new(
        m,
        matrix_from_doc(&doc.module.alpha_v)?,
        matrix_from_doc(&doc.module.beta_v)?,
    )?;
    let act = ActionPair::new(
        n,
        m,
        tensor_from_sparse(&doc.lambda_l, n, m, m, "lambda_l")?,
        tensor_from_sparse(&doc.lambda_r, m, n, m, "lambda_r")?,
    )?;
    let theta = Cochain2::new(n, m, tensor_from_sparse(&doc.theta, n, n, m, "theta")?)?;
    let mu = tensor_from_sparse(&doc.mu, m, m, m, "mu")?;
    Ok(SplitExtensionData {
        l,
        module,
        act,
        theta,
        mu,
    })
}

/// Runtime configuration: which reading of the ill-typed representation
/// axiom to use. Defaults to the right-action reading.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub axiom2_reading: ReadingDoc,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReadingDoc {
    #[default]
    RightAction,
    LeftAction,
}

impl From<ReadingDoc> for Axiom2Reading {
    fn from(r: ReadingDoc) -> Axiom2Reading {
        match r {
            ReadingDoc::RightAction => Axiom2Reading::RightAction,
            ReadingDoc::LeftAction => Axiom2Reading::LeftAction,
        }
    }
}

pub fn from_json_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::sample;

    #[test]
    fn algebra_round_trip() {
        for l in [sample::solvable2(), sample::bihom2(), sample::abelian(3)] {
            let doc = algebra_to_doc(&l);
            let json = to_json_string(&doc);
            let parsed: AlgebraDoc = from_json_str(&json).unwrap();
            let back = algebra_from_doc(&parsed).unwrap();
            assert_eq!(back, l);
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let json = r#"{"name":"x","dim":1,"bracket":[],"alpha":[["1"]],"beta":[["1"]],"extra":0}"#;
        assert!(from_json_str::<AlgebraDoc>(json).is_err());
    }

    #[test]
    fn truncated_json_rejected() {
        assert!(from_json_str::<AlgebraDoc>(r#"{"name":"x","#).is_err());
    }

    #[test]
    fn malformed_rational_rejected() {
        let json = r#"{"name":"x","dim":1,"bracket":[[0,0,["1/0"]]],"alpha":[["1"]],"beta":[["1"]]}"#;
        let doc: AlgebraDoc = from_json_str(json).unwrap();
        assert!(algebra_from_doc(&doc).is_err());
    }

    #[test]
    fn sparse_indices_validated() {
        let json = r#"{"name":"x","dim":1,"bracket":[[0,5,["1"]]],"alpha":[["1"]],"beta":[["1"]]}"#;
        let doc: AlgebraDoc = from_json_str(json).unwrap();
        assert!(algebra_from_doc(&doc).is_err());
    }

    #[test]
    fn representation_round_trip() {
        let l = sample::solvable2();
        let (module, act) = sample::adjoint_rep(&l);
        let doc = representation_to_doc(&module, &act);
        let json = to_json_string(&doc);
        let parsed: RepresentationDoc = from_json_str(&json).unwrap();
        let (m2, a2) = representation_from_doc(&parsed, l.dim()).unwrap();
        assert_eq!(m2, module);
        assert_eq!(a2, act);
    }

    #[test]
    fn cochain_and_extension_round_trip() {
        let l = sample::solvable2();
        let (module, act) = sample::trivial_rep(&l, 1);
        let mut t = vec![vec![vec![rat(0)]; 2]; 2];
        t[0][1] = vec![rat(1)];
        t[1][0] = vec![rat(-1)];
        let theta = Cochain2::new(2, 1, t).unwrap();
        let cdoc = cochain2_to_doc(&theta);
        let back = cochain2_from_doc(
            &from_json_str(&to_json_string(&cdoc)).unwrap(),
            2,
            1,
        )
        .unwrap();
        assert_eq!(back, theta);

        let data = crate::ext::SplitExtensionData::abelian(l, module, act, theta);
        let (_, seq) = crate::ext::semidirect_sum(&data).unwrap();
        let edoc = extension_to_doc(&seq, Some(&crate::ext::graph_section(2, 1)));
        let (seq2, s2) = extension_from_doc(&from_json_str(&to_json_string(&edoc)).unwrap()).unwrap();
        assert_eq!(seq2.m, seq.m);
        assert_eq!(seq2.i, seq.i);
        assert_eq!(seq2.pi, seq.pi);
        assert!(s2.is_some());

        let ddoc = split_data_to_doc(&data);
        let data2 = split_data_from_doc(&from_json_str(&to_json_string(&ddoc)).unwrap()).unwrap();
        assert_eq!(data2, data);
    }

    #[test]
    fn config_parses() {
        let c: Config = from_json_str(r#"{"axiom2_reading":"left_action"}"#).unwrap();
        assert_eq!(c.axiom2_reading, ReadingDoc::LeftAction);
        let c: Config = from_json_str("{}").unwrap();
        assert_eq!(c.axiom2_reading, ReadingDoc::RightAction);
    }
}
