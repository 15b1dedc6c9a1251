//! Just enough of the DOT grammar to read back what the renderer writes:
//! `digraph ID { stmt* }` with attribute, node and edge statements.

use std::collections::BTreeMap;

#[derive(Debug, Default)]
pub struct DotGraph {
    pub name: String,
    pub nodes: BTreeMap<String, BTreeMap<String, String>>,
    pub edges: Vec<(String, String)>,
    pub graph_attrs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Id(String),
    Arrow,
    Punct(char),
}

fn lex(src: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let cs: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '-' && cs.get(i + 1) == Some(&'>') {
            out.push(Tok::Arrow);
            i += 2;
        } else if "{}[];=,".contains(c) {
            out.push(Tok::Punct(c));
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            loop {
                match cs.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('"') => break,
                    Some('\\') => {
                        s.push(*cs.get(i + 1).ok_or("dangling escape")?);
                        i += 2;
                    }
                    Some(&d) => {
                        s.push(d);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push(Tok::Id(s));
        } else if c.is_alphanumeric() || c == '_' || c == '.' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '.') {
                i += 1;
            }
            out.push(Tok::Id(cs[start..i].iter().collect()));
        } else {
            return Err(format!("unexpected {c:?}"));
        }
    }
    Ok(out)
}

struct P {
    toks: Vec<Tok>,
    pos: usize,
}

impl P {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok, String> {
        let t = self.toks.get(self.pos).cloned().ok_or("unexpected end")?;
        self.pos += 1;
        Ok(t)
    }

    fn id(&mut self) -> Result<String, String> {
        match self.next()? {
            Tok::Id(s) => Ok(s),
            t => Err(format!("expected identifier, got {t:?}")),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), String> {
        match self.next()? {
            Tok::Punct(d) if d == c => Ok(()),
            t => Err(format!("expected {c:?}, got {t:?}")),
        }
    }

    fn attrs(&mut self) -> Result<BTreeMap<String, String>, String> {
        let mut m = BTreeMap::new();
        self.punct('[')?;
        while self.peek() != Some(&Tok::Punct(']')) {
            let k = self.id()?;
            self.punct('=')?;
            m.insert(k, self.id()?);
            if self.peek() == Some(&Tok::Punct(',')) {
                self.pos += 1;
            }
        }
        self.punct(']')?;
        Ok(m)
    }
}

pub fn parse(src: &str) -> Result<DotGraph, String> {
    let mut p = P { toks: lex(src)?, pos: 0 };
    if p.id()? != "digraph" {
        return Err("expected digraph".into());
    }
    let mut g = DotGraph::default();
    if let Some(Tok::Id(_)) = p.peek() {
        g.name = p.id()?;
    }
    p.punct('{')?;
    while p.peek() != Some(&Tok::Punct('}')) {
        let first = p.id()?;
        match p.peek() {
            Some(Tok::Punct('=')) => {
                p.pos += 1;
                let v = p.id()?;
                g.graph_attrs.insert(first, v);
            }
            Some(Tok::Punct('[')) if ["node", "edge", "graph"].contains(&first.as_str()) => {
                p.attrs()?;
            }
            Some(Tok::Arrow) => {
                let mut from = first;
                while p.peek() == Some(&Tok::Arrow) {
                    p.pos += 1;
                    let to = p.id()?;
                    for n in [&from, &to] {
                        g.nodes.entry(n.clone()).or_default();
                    }
                    g.edges.push((from, to.clone()));
                    from = to;
                }
                if p.peek() == Some(&Tok::Punct('[')) {
                    p.attrs()?;
                }
            }
            _ => {
                let attrs = if p.peek() == Some(&Tok::Punct('[')) { p.attrs()? } else { BTreeMap::new() };
                g.nodes.entry(first).or_default().extend(attrs);
            }
        }
        if p.peek() == Some(&Tok::Punct(';')) {
            p.pos += 1;
        }
    }
    p.punct('}')?;
    if p.pos != p.toks.len() {
        return Err("trailing input".into());
    }
    Ok(g)
}
