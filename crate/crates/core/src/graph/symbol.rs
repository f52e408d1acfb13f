//! Coxeter symbols such as `[5,3,3^{1,1}]` or `[(3^4,4)]`.
//!
//! Grammar:
//!
//! ```text
//! symbol = "[" part { "," part } "]"
//! part   = weight | cycle | branch
//! weight = INT | "inf" | "∞"
//! cycle  = "(" cw { "," cw } ")"      cw = INT [ "^" INT ]
//! branch = INT "^{1,1}"              (final part only)
//! ```
//!
//! A run of weights between two cycles is read as: first weight joins the
//! left cycle, inner weights form a chain, last weight joins the right cycle.
//! Cycles attach to their neighbours through their first node.

use std::fmt;

use super::{EdgeLabel, GraphError, VinbergGraph};

/// A linear or cyclic weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    Finite(u32),
    Infinite,
}

impl Weight {
    fn label(self) -> EdgeLabel {
        match self {
            Weight::Finite(m) => EdgeLabel::Finite(m),
            Weight::Infinite => EdgeLabel::Dotted(None),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(m) => write!(f, "{m}"),
            Weight::Infinite => write!(f, "inf"),
        }
    }
}

/// Building block of a parsed symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    /// Path whose `k` edge weights are given; it has `k + 1` nodes.
    Chain(Vec<Weight>),
    /// Closed cycle; one node per weight, weight `i` joins nodes `i` and `i + 1`.
    Cycle(Vec<u32>),
    /// Two pendant nodes joined to the last spine node with this weight.
    BranchTail(u32),
}

/// Parsed symbol: components joined in order by `separators`
/// (`separators.len() + 1 == components.len()`, not counting a final
/// [`Component::BranchTail`], which has no separator).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterSymbol {
    pub components: Vec<Component>,
    pub separators: Vec<Weight>,
    source: String,
}

impl CoxeterSymbol {
    /// Normalised source text (whitespace removed).
    pub fn source(&self) -> &str {
        &self.source
    }
}

impl fmt::Display for CoxeterSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

#[derive(Debug)]
enum RawPart {
    Weight(Weight),
    Cycle(Vec<u32>, usize),
    Branch(u32, usize),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, GraphError> {
        Err(GraphError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), GraphError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => self.error(format!("expected `{c}`, found `{x}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn int(&mut self) -> Result<(u64, usize), GraphError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.error("expected an integer");
        }
        self.pos += digits;
        match self.src[start..self.pos].parse::<u64>() {
            Ok(v) => Ok((v, start)),
            Err(_) => Err(GraphError::Syntax {
                offset: start,
                message: "integer too large".into(),
            }),
        }
    }

    fn weight_value(&self, (v, offset): (u64, usize)) -> Result<u32, GraphError> {
        if v < 3 {
            return Err(GraphError::WeightTooSmall { weight: v, offset });
        }
        u32::try_from(v).map_err(|_| GraphError::Syntax {
            offset,
            message: "weight too large".into(),
        })
    }

    fn part(&mut self) -> Result<RawPart, GraphError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        if rest.starts_with("inf") {
            self.pos += 3;
            return Ok(RawPart::Weight(Weight::Infinite));
        }
        if rest.starts_with('∞') {
            self.pos += '∞'.len_utf8();
            return Ok(RawPart::Weight(Weight::Infinite));
        }
        if rest.starts_with('(') {
            self.pos += 1;
            let mut weights = Vec::new();
            loop {
                let w = self.int()?;
                let w = self.weight_value(w)?;
                let mut reps = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let (r, off) = self.int()?;
                    if r == 0 || r > 64 {
                        return Err(GraphError::Syntax {
                            offset: off,
                            message: "repetition count must be between 1 and 64".into(),
                        });
                    }
                    reps = r as usize;
                }
                weights.extend(std::iter::repeat(w).take(reps));
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.error("expected `,` or `)` in cycle"),
                }
            }
            if weights.len() < 3 {
                return Err(GraphError::Syntax {
                    offset: start,
                    message: "a cycle needs at least three weights".into(),
                });
            }
            return Ok(RawPart::Cycle(weights, start));
        }
        let w = self.int()?;
        let value = self.weight_value(w)?;
        if self.peek() == Some('^') {
            let caret = self.pos;
            self.pos += 1;
            let ok = self.src[self.pos..]
                .chars()
                .filter(|c| !c.is_whitespace())
                .take(5)
                .collect::<String>()
                == "{1,1}";
            if !ok {
                return Err(GraphError::UnsupportedBranch { offset: caret });
            }
            for c in ['{', '1', ',', '1', '}'] {
                self.expect(c)?;
            }
            return Ok(RawPart::Branch(value, w.1));
        }
        Ok(RawPart::Weight(Weight::Finite(value)))
    }
}

/// Parse a symbol. Errors carry the byte offset of the offending token.
pub fn parse_coxeter_symbol(text: &str) -> Result<CoxeterSymbol, GraphError> {
    let mut p = Parser { src: text, pos: 0 };
    p.expect('[')?;
    let mut parts = Vec::new();
    loop {
        parts.push(p.part()?);
        match p.peek() {
            Some(',') => p.pos += 1,
            Some(']') => {
                p.pos += 1;
                break;
            }
            Some(c) => return p.error(format!("expected `,` or `]`, found `{c}`")),
            None => return p.error("unterminated symbol"),
        }
    }
    if p.peek().is_some() {
        return p.error("trailing input after `]`");
    }

    let mut tail = None;
    if let Some(pos) = parts.iter().position(|x| matches!(x, RawPart::Branch(..))) {
        if pos + 1 != parts.len() {
            let RawPart::Branch(_, off) = parts[pos] else { unreachable!() };
            return Err(GraphError::Syntax {
                offset: off,
                message: "a branch must be the last part".into(),
            });
        }
        if let Some(RawPart::Branch(w, _)) = parts.pop() {
            tail = Some(w);
        }
    }

    let (mut components, separators) = assemble(parts)?;
    if let Some(w) = tail {
        components.push(Component::BranchTail(w));
    }
    Ok(CoxeterSymbol {
        components,
        separators,
        source: text.chars().filter(|c| !c.is_whitespace()).collect(),
    })
}

fn assemble(parts: Vec<RawPart>) -> Result<(Vec<Component>, Vec<Weight>), GraphError> {
    let mut components = Vec::new();
    let mut separators = Vec::new();
    let mut run: Vec<Weight> = Vec::new();
    let mut seen_cycle = false;
    for part in parts {
        match part {
            RawPart::Weight(w) => run.push(w),
            RawPart::Cycle(ws, offset) => {
                if seen_cycle {
                    match run.len() {
                        0 => {
                            return Err(GraphError::Syntax {
                                offset,
                                message: "adjacent cycles need a joining weight".into(),
                            })
                        }
                        1 => separators.push(run[0]),
                        k => {
                            separators.push(run[0]);
                            components.push(Component::Chain(run[1..k - 1].to_vec()));
                            separators.push(run[k - 1]);
                        }
                    }
                } else if let Some((&last, init)) = run.split_last() {
                    components.push(Component::Chain(init.to_vec()));
                    separators.push(last);
                }
                run.clear();
                components.push(Component::Cycle(ws));
                seen_cycle = true;
            }
            RawPart::Branch(..) => unreachable!("branch removed before assembly"),
        }
    }
    if !seen_cycle {
        components.push(Component::Chain(run));
    } else if let Some((&first, rest)) = run.split_first() {
        separators.push(first);
        components.push(Component::Chain(rest.to_vec()));
    }
    Ok((components, separators))
}

/// Build the Coxeter graph. Nodes are numbered left to right in symbol order.
pub fn symbol_to_graph(symbol: &CoxeterSymbol) -> VinbergGraph {
    let mut edges: Vec<(usize, usize, EdgeLabel)> = Vec::new();
    let mut next = 0usize;
    let mut last_node: Option<usize> = None;
    let mut sep = symbol.separators.iter();
    for component in &symbol.components {
        match component {
            Component::Chain(ws) => {
                let first = next;
                for (k, w) in ws.iter().enumerate() {
                    edges.push((first + k, first + k + 1, w.label()));
                }
                next += ws.len() + 1;
                if let Some(prev) = last_node {
                    let w = sep.next().expect("separator count");
                    edges.push((prev, first, w.label()));
                }
                last_node = Some(next - 1);
            }
            Component::Cycle(ws) => {
                let first = next;
                let n = ws.len();
                for (k, &w) in ws.iter().enumerate() {
                    edges.push((first + k, first + (k + 1) % n, EdgeLabel::Finite(w)));
                }
                next += n;
                if let Some(prev) = last_node {
                    let w = sep.next().expect("separator count");
                    edges.push((prev, first, w.label()));
                }
                last_node = Some(first);
            }
            Component::BranchTail(w) => {
                let anchor = last_node.expect("branch follows a spine");
                edges.push((anchor, next, EdgeLabel::Finite(*w)));
                edges.push((anchor, next + 1, EdgeLabel::Finite(*w)));
                next += 2;
            }
        }
    }
    let mut g = VinbergGraph::new(next);
    for (i, j, l) in edges {
        g.add_edge(i, j, l).expect("symbol edges are distinct");
    }
    g
}
