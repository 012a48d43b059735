use std::fmt;
use std::str::FromStr;
use std::time::Duration;

/// The statements the checkers know how to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// `σ1(G) >= m`, equality exactly on good graphs.
    Sigma1AtLeastM,
    /// `σ1(G) >= n - 1`, equality exactly on the star.
    StarMinimum,
    /// Good graphs with a cycle have no bridge.
    GoodCyclicNoBridge,
    /// Good graphs with a cycle have no cut vertex.
    GoodCyclicNoCutVertex,
    /// Cyclic graphs: `σ1 >= n` at `n = 3`, `σ1 >= 2n - 4` for `n >= 4`,
    /// equality exactly on `K_3` / `K_{2,n-2}`.
    MainTheorem,
    /// The degree and bound claims used on the way to the main theorem.
    StructuralClaims,
}

impl Statement {
    pub const ALL: [Statement; 6] = [
        Statement::Sigma1AtLeastM,
        Statement::StarMinimum,
        Statement::GoodCyclicNoBridge,
        Statement::GoodCyclicNoCutVertex,
        Statement::MainTheorem,
        Statement::StructuralClaims,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Statement::Sigma1AtLeastM => "sigma1-ge-m",
            Statement::StarMinimum => "star-minimum",
            Statement::GoodCyclicNoBridge => "no-bridge",
            Statement::GoodCyclicNoCutVertex => "no-cutvertex",
            Statement::MainTheorem => "main",
            Statement::StructuralClaims => "claims",
        }
    }

    /// Smallest order at which the statement says anything.
    pub fn min_order(&self) -> usize {
        match self {
            Statement::Sigma1AtLeastM | Statement::StarMinimum => 2,
            Statement::GoodCyclicNoBridge
            | Statement::GoodCyclicNoCutVertex
            | Statement::MainTheorem => 3,
            Statement::StructuralClaims => 4,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| format!("unknown statement {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// A graph violating the statement, with the values that show it.
/// `observed` is a `;`-separated list of `key=value` pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub graph6: String,
    pub observed: String,
}

/// Outcome of one sub-claim of [`Statement::StructuralClaims`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimVerdict {
    pub claim: char,
    /// Graphs meeting the claim's hypotheses.
    pub applicable: usize,
    pub failures: usize,
}

impl ClaimVerdict {
    pub fn verdict(&self) -> Verdict {
        if self.failures == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub statement: Statement,
    pub min_order: usize,
    pub max_order: usize,
    pub graphs_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    /// graph6 strings of the equality or extremal graphs.
    pub witnesses: Vec<String>,
    pub claims: Vec<ClaimVerdict>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(statement: Statement, order: usize) -> Self {
        VerificationReport {
            statement,
            min_order: order,
            max_order: order,
            graphs_checked: 0,
            counterexamples: Vec::new(),
            witnesses: Vec::new(),
            claims: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.counterexamples.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    /// Sorts the lists so output does not depend on scheduling. graph6
    /// strings start with the order byte, so this also orders by `n`.
    pub fn normalize(&mut self) {
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.witnesses.sort();
        self.witnesses.dedup();
        self.claims.sort_by_key(|c| c.claim);
    }

    /// Folds a report for the same statement over another order range into
    /// this one.
    pub fn merge(&mut self, other: VerificationReport) {
        assert_eq!(self.statement, other.statement, "merging different statements");
        self.min_order = self.min_order.min(other.min_order);
        self.max_order = self.max_order.max(other.max_order);
        self.graphs_checked += other.graphs_checked;
        self.counterexamples.extend(other.counterexamples);
        self.witnesses.extend(other.witnesses);
        for c in other.claims {
            match self.claims.iter_mut().find(|x| x.claim == c.claim) {
                Some(x) => {
                    x.applicable += c.applicable;
                    x.failures += c.failures;
                }
                None => self.claims.push(c),
            }
        }
        self.elapsed += other.elapsed;
        self.normalize();
    }

    /// One tab-separated line of `key=value` fields. Elapsed time is left out
    /// so the record is identical across runs.
    pub fn to_record(&self) -> String {
        let witnesses = self.witnesses.join(",");
        let counterexamples: Vec<String> = self
            .counterexamples
            .iter()
            .map(|c| format!("{}:{}", c.graph6, c.observed))
            .collect();
        let mut line = format!(
            "statement={}\tn={}..{}\tgraphs_checked={}\tverdict={}\twitnesses={}\tcounterexamples={}",
            self.statement,
            self.min_order,
            self.max_order,
            self.graphs_checked,
            self.verdict(),
            witnesses,
            counterexamples.join(",")
        );
        if !self.claims.is_empty() {
            let claims: Vec<String> = self
                .claims
                .iter()
                .map(|c| format!("{}:{}:{}", c.claim, c.verdict(), c.applicable))
                .collect();
            line.push_str(&format!("\tclaims={}", claims.join(",")));
        }
        line
    }

    /// Parses a line produced by [`to_record`](Self::to_record). The elapsed
    /// time comes back as zero and claim failure counts as 0 or 1.
    pub fn parse_record(line: &str) -> Result<VerificationReport, String> {
        let mut report: Option<VerificationReport> = None;
        let mut verdict = None;
        let field = |s: &str| -> Result<(String, String), String> {
            s.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| format!("field without '=': {s:?}"))
        };
        let split_list = |v: &str| -> Vec<String> {
            if v.is_empty() {
                Vec::new()
            } else {
                v.split(',').map(str::to_string).collect()
            }
        };
        for part in line.trim_end().split('\t') {
            let (k, v) = field(part)?;
            if k == "statement" {
                report = Some(VerificationReport::new(v.parse()?, 0));
                continue;
            }
            let r = report.as_mut().ok_or("record must start with statement=")?;
            match k.as_str() {
                "n" => {
                    let (lo, hi) = v.split_once("..").ok_or("bad n range")?;
                    r.min_order = lo.parse().map_err(|_| "bad n range")?;
                    r.max_order = hi.parse().map_err(|_| "bad n range")?;
                }
                "graphs_checked" => {
                    r.graphs_checked = v.parse().map_err(|_| "bad graphs_checked")?
                }
                "verdict" => verdict = Some(v),
                "witnesses" => r.witnesses = split_list(&v),
                "counterexamples" => {
                    r.counterexamples = split_list(&v)
                        .into_iter()
                        .map(|c| {
                            let (g, o) = c.split_once(':').ok_or("bad counterexample")?;
                            Ok(Counterexample {
                                graph6: g.to_string(),
                                observed: o.to_string(),
                            })
                        })
                        .collect::<Result<_, String>>()?
                }
                "claims" => {
                    r.claims = split_list(&v)
                        .into_iter()
                        .map(|c| {
                            let mut it = c.split(':');
                            let (Some(id), Some(ok), Some(applicable), None) =
                                (it.next(), it.next(), it.next(), it.next())
                            else {
                                return Err(format!("bad claim {c:?}"));
                            };
                            Ok(ClaimVerdict {
                                claim: id.chars().next().ok_or("empty claim id")?,
                                applicable: applicable.parse().map_err(|_| "bad claim count")?,
                                failures: usize::from(ok != "PASS"),
                            })
                        })
                        .collect::<Result<_, String>>()?
                }
                other => return Err(format!("unknown field {other:?}")),
            }
        }
        let r = report.ok_or("empty record")?;
        if verdict.as_deref() != Some(&r.verdict().to_string()) {
            return Err("verdict disagrees with counterexample list".into());
        }
        Ok(r)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}  n={}..{}  {}  ({} graphs, {:.3}s)",
            self.statement,
            self.min_order,
            self.max_order,
            self.verdict(),
            self.graphs_checked,
            self.elapsed.as_secs_f64()
        )?;
        for c in &self.claims {
            writeln!(
                f,
                "  claim ({}) {}: {} applicable, {} failing",
                c.claim,
                c.verdict(),
                c.applicable,
                c.failures
            )?;
        }
        if !self.witnesses.is_empty() {
            writeln!(f, "  witnesses: {}", self.witnesses.join(" "))?;
        }
        for c in &self.counterexamples {
            writeln!(f, "  counterexample {}  {}", c.graph6, c.observed)?;
        }
        Ok(())
    }
}
