//! Report types shared by every command, with JSON and plain-text renderings.

use std::fmt::Write as _;

use pairmds::code::FactorSpec;
use pairmds::distance::{Distance, Level};
use pairmds::families::{ClaimedParams, FamilyName};
use pairmds::pairsearch::CertificateJson;
use pairmds::ConstacyclicCode;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub family: Option<FamilyInfo>,
    pub target_dp: Option<usize>,
    pub code: CodeIdentity,
    pub hamming: HammingSection,
    pub pair: Option<CertificateJson>,
    pub brute_force: Option<BruteForce>,
    pub verdicts: Verdicts,
    pub mismatches: Vec<Mismatch>,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub name: FamilyName,
    pub p: u64,
    pub claimed: ClaimedParams,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeIdentity {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub eta: u64,
    pub l: usize,
    pub e: u32,
    pub generator: String,
    pub factors: Vec<FactorSpec>,
}

impl CodeIdentity {
    pub fn of(code: &ConstacyclicCode) -> Self {
        Self {
            p: code.field().modulus(),
            n: code.n(),
            k: code.k(),
            eta: code.eta().value(),
            l: code.l(),
            e: code.e(),
            generator: code.generator().to_string(),
            factors: pairmds::code::CodeSpec::from_code(code).factors,
        }
    }
}

/// `d_H` with its level table; the table is empty when the level formula does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammingSection {
    pub d_h: usize,
    pub witness_t: Option<u64>,
    pub levels: Vec<Level>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForce {
    pub d_h: Option<Distance>,
    pub d_p: Option<Distance>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// `k = n - d_H + 1`.
    pub hamming_mds: bool,
    /// `k = n - d_p + 2`.
    pub pair_mds: Option<bool>,
    /// `d_p >= d_H + 2`.
    pub pair_gap: Option<bool>,
    /// For `2 <= d_H < n`: `pair_gap` holds exactly when the code is not Hamming MDS.
    pub gap_matches_hamming: Option<bool>,
}

impl Verdicts {
    pub fn compute(n: usize, k: usize, d_h: usize, d_p: Option<usize>) -> Self {
        let hamming_mds = pairmds::metric::is_mds_hamming(n, k, d_h);
        let pair_mds = d_p.and_then(|d| pairmds::metric::is_mds_pair(n, k, d).ok());
        let pair_gap = d_p.map(|d| d >= d_h + 2);
        let gap_matches_hamming = match pair_gap {
            Some(gap) if d_h >= 2 && d_h < n => Some(gap == !hamming_mds),
            _ => None,
        };
        Self {
            hamming_mds,
            pair_mds,
            pair_gap,
            gap_matches_hamming,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub quantity: String,
    pub expected: usize,
    pub computed: usize,
}

/// Wall-clock time per phase in microseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Timing {
    pub hamming_us: u64,
    pub pair_us: Option<u64>,
    pub brute_force_us: Option<u64>,
    pub total_us: u64,
}

impl Report {
    pub fn d_p(&self) -> Option<usize> {
        self.pair.as_ref().map(|c| c.dp)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let c = &self.code;
        if let Some(f) = &self.family {
            let _ = writeln!(s, "family    {} p={}", f.name, f.p);
        }
        let _ = writeln!(
            s,
            "code      [{}, {}, {}] over F_{}, n = {} * {}^{}, eta = {}",
            c.n, c.k, self.hamming.d_h, c.p, c.l, c.p, c.e, c.eta
        );
        let _ = writeln!(s, "generator {}", c.generator);
        match self.hamming.witness_t {
            Some(t) => {
                let _ = writeln!(s, "d_H       {} (attained at t = {t})", self.hamming.d_h);
            }
            None => {
                let _ = writeln!(s, "d_H       {}", self.hamming.d_h);
            }
        }
        if !self.hamming.levels.is_empty() {
            let _ = writeln!(
                s,
                "  {:>4} {:>5} {:>7} {:>8}",
                "t", "P_t", "d(C_t)", "product"
            );
            for lv in &self.hamming.levels {
                let _ = writeln!(
                    s,
                    "  {:>4} {:>5} {:>7} {:>8}",
                    lv.t,
                    lv.p_t,
                    lv.bar_distance.to_string(),
                    lv.product.to_string()
                );
            }
        }
        if let Some(pair) = &self.pair {
            let _ = writeln!(s, "d_p       {}", pair.dp);
            if let Some(w) = &pair.witness {
                let text: Vec<String> = w.iter().map(u64::to_string).collect();
                let _ = writeln!(s, "witness   ({})", text.join(","));
            }
            for cls in &pair.classes {
                let verdict = if cls.solvable == 0 {
                    "excluded"
                } else {
                    "witness found"
                };
                let _ = writeln!(
                    s,
                    "  class w={} r={}: {} patterns, {verdict}",
                    cls.w, cls.r, cls.patterns
                );
            }
        }
        if let Some(bf) = &self.brute_force {
            let show = |d: Option<Distance>| d.map_or_else(|| "-".to_string(), |d| d.to_string());
            let _ = writeln!(s, "brute     d_H {}, d_p {}", show(bf.d_h), show(bf.d_p));
        }
        let v = &self.verdicts;
        let yn = |b: bool| if b { "yes" } else { "no" };
        let opt = |b: Option<bool>| b.map_or("-", yn);
        let _ = writeln!(
            s,
            "verdicts  Hamming MDS: {}; pair MDS: {}; d_p >= d_H + 2: {}; consistent with Hamming MDS test: {}",
            yn(v.hamming_mds),
            opt(v.pair_mds),
            opt(v.pair_gap),
            opt(v.gap_matches_hamming)
        );
        for m in &self.mismatches {
            let _ = writeln!(
                s,
                "mismatch  {}: expected {}, computed {}",
                m.quantity, m.expected, m.computed
            );
        }
        let t = &self.timing;
        let secs = |us: u64| format!("{:.3}s", us as f64 / 1e6);
        let _ = write!(s, "timing    d_H {}", secs(t.hamming_us));
        if let Some(us) = t.pair_us {
            let _ = write!(s, ", d_p {}", secs(us));
        }
        if let Some(us) = t.brute_force_us {
            let _ = write!(s, ", brute force {}", secs(us));
        }
        let _ = writeln!(s, ", total {}", secs(t.total_us));
        let _ = writeln!(
            s,
            "result    {}",
            if self.mismatches.is_empty() {
                "verified"
            } else {
                "MISMATCH"
            }
        );
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub schema: u32,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: FamilyName,
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub d_h: usize,
    pub d_p: Option<usize>,
    pub pair_mds: Option<bool>,
    pub pass: bool,
    pub elapsed_us: u64,
}

impl TableReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<6} {:>4} {:>5} {:>5} {:>4} {:>4} {:>4} {:>6} {:>10}",
            "family", "p", "n", "k", "d_H", "d_p", "mds", "result", "time"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<6} {:>4} {:>5} {:>5} {:>4} {:>4} {:>4} {:>6} {:>9.3}s",
                r.family.as_str(),
                r.p,
                r.n,
                r.k,
                r.d_h,
                r.d_p.map_or_else(|| "-".to_string(), |d| d.to_string()),
                r.pair_mds.map_or("-", |b| if b { "yes" } else { "no" }),
                if r.pass { "pass" } else { "FAIL" },
                r.elapsed_us as f64 / 1e6
            );
        }
        let passed = self.rows.iter().filter(|r| r.pass).count();
        let _ = writeln!(s, "{passed}/{} rows pass", self.rows.len());
        s
    }
}
