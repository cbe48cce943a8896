use super::trace::{MachineTrace, TraceStep};
use crate::code::GroupCode;
use crate::error::{Error, Result};
use crate::residue::{dot, Subgroup};
use crate::sequence::Interval;

/// Syndrome-former built from short dual codewords.
///
/// Rows are collected level by level: first the dual words supported on a
/// single time, then on two consecutive times, and so on, keeping a row only
/// if it enlarges the span. Each row is emitted at its last nonzero time.
#[derive(Debug, Clone)]
pub struct SyndromeFormer {
    code: GroupCode,
    /// `(first time, last time, row)`.
    rows: Vec<(usize, usize, Vec<u64>)>,
}

impl SyndromeFormer {
    pub fn new(code: &GroupCode) -> Result<Self> {
        let dual = code.dual();
        let n = code.axis_len();
        let layout = code.layout();
        let mut span = Subgroup::trivial(code.modulus(), layout.total_dim());
        let mut rows = Vec::new();
        'levels: for j in 0..n {
            for k in 0..n - j {
                let piece = dual.shorten(&Interval::at(k, j).to_subset(n)?)?;
                for row in piece.carrier().basis_rows() {
                    if span.membership(row)? {
                        continue;
                    }
                    span = span.sum(&Subgroup::from_rows_unchecked(
                        code.modulus(),
                        layout.total_dim(),
                        vec![row.clone()],
                    ))?;
                    let support: Vec<usize> = (0..n)
                        .filter(|&t| row[layout.block(t)].iter().any(|&x| x != 0))
                        .collect();
                    rows.push((support[0], *support.last().unwrap(), row.clone()));
                }
                if &span == dual.carrier() {
                    break 'levels;
                }
            }
        }
        if &span != dual.carrier() {
            return Err(Error::InternalInconsistency(
                "short dual words do not span the dual code".into(),
            ));
        }
        rows.sort_by_key(|(first, last, _)| (*last, *first));
        Ok(SyndromeFormer {
            code: code.clone(),
            rows,
        })
    }

    /// Longest row support, in time steps, minus one.
    pub fn memory(&self) -> usize {
        self.rows.iter().map(|(f, l, _)| l - f).max().unwrap_or(0)
    }

    /// Number of checks emitted at each time.
    pub fn widths(&self) -> Vec<usize> {
        let mut w = vec![0; self.code.axis_len()];
        for (_, last, _) in &self.rows {
            w[*last] += 1;
        }
        w
    }

    pub fn check_rows(&self) -> impl Iterator<Item = (usize, usize, &Vec<u64>)> {
        self.rows.iter().map(|(f, l, r)| (*f, *l, r))
    }

    /// Per-time syndromes: pairings of `w` with the rows ending at that time.
    pub fn form_syndromes(&self, w: &[u64]) -> Result<(Vec<Vec<u64>>, MachineTrace)> {
        let layout = self.code.layout();
        if w.len() != layout.total_dim() {
            return Err(Error::DimensionMismatch {
                expected: layout.total_dim(),
                found: w.len(),
            });
        }
        let m = self.code.modulus();
        let w: Vec<u64> = w.iter().map(|&x| m.reduce(x)).collect();
        let n = self.code.axis_len();
        let mut out = vec![Vec::new(); n];
        for (_, last, row) in &self.rows {
            out[*last].push(dot(m, row, &w));
        }
        let mut trace = MachineTrace::new("syndrome-former");
        for (k, s) in out.iter().enumerate() {
            trace.steps.push(TraceStep {
                time: k,
                input: None,
                symbol: w[layout.block(k)].to_vec(),
                state: None,
                syndrome: Some(s.clone()),
            });
        }
        Ok((out, trace))
    }

    /// Whether every syndrome component is zero.
    pub fn is_member(&self, w: &[u64]) -> Result<bool> {
        let (s, _) = self.form_syndromes(w)?;
        Ok(s.iter().flatten().all(|&x| x == 0))
    }

    /// `{w : all syndromes vanish}`, computed as the annihilator of the rows.
    pub fn kernel(&self) -> Subgroup {
        let rows = self.rows.iter().map(|(_, _, r)| r.clone()).collect();
        Subgroup::from_rows_unchecked(self.code.modulus(), self.code.layout().total_dim(), rows)
            .orthogonal()
    }
}
