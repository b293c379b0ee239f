//! Finite group presentations: a small parser for `<gens | relators>` text
//! and the built-in catalog of group families.

use std::fmt;

use thiserror::Error;

/// One generator occurrence in a word, possibly inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A word over the generators, stored one letter at a time.
pub type Word = Vec<Letter>;

fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverted()).collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown generator '{name}' at byte {pos}")]
    UnknownGenerator { pos: usize, name: String },
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

/// A finite presentation: ordered generators plus relator words (each equal
/// to the identity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, checking that generator names are distinct and
    /// every relator letter refers to a declared generator.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, ParseError> {
        if generators.is_empty() {
            return Err(syntax(0, "presentation needs at least one generator"));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(syntax(0, format!("duplicate generator '{g}'")));
            }
        }
        if relators.is_empty() {
            return Err(syntax(0, "presentation needs at least one relator"));
        }
        for rel in &relators {
            for l in rel {
                if l.gen >= generators.len() {
                    return Err(ParseError::UnknownGenerator {
                        pos: 0,
                        name: format!("#{}", l.gen),
                    });
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Parses `<g1,g2,... | rel, rel, ...>`. A rel is a word or a chain of
    /// `=`-separated words; a chain `w1 = w2 = w3` contributes the relators
    /// `w1 w2^-1` and `w2 w3^-1`, and a lone word means `word = 1`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        Parser::new(text).parse()
    }

    /// Renders back to the grammar accepted by [`Presentation::parse`].
    /// Runs of a repeated letter compress to `g^k`.
    pub fn render(&self) -> String {
        let mut out = String::from("<");
        out.push_str(&self.generators.join(","));
        out.push_str(" | ");
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        out.push_str(&rels.join(", "));
        out.push('>');
        out
    }

    fn render_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut factors: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[w[i].gen];
            let exp = (j - i) as i64 * if w[i].inverse { -1 } else { 1 };
            if exp == 1 {
                factors.push(name.clone());
            } else {
                factors.push(format!("{name}^{exp}"));
            }
            i = j;
        }
        factors.join("*")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    generators: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            generators: Vec::new(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(syntax(self.pos, format!("expected '{}'", c as char))),
        }
    }

    fn ident(&mut self) -> Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_alphabetic() => {}
            _ => return Err(syntax(self.pos, "expected an identifier")),
        }
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("input was a str")
            .to_string();
        Ok((start, name))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let digits_start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(syntax(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[digits_start..self.pos]).unwrap();
        let value: i64 = text
            .parse()
            .map_err(|_| syntax(start, "exponent out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn parse(mut self) -> Result<Presentation, ParseError> {
        self.expect(b'<')?;
        loop {
            let (pos, name) = self.ident()?;
            if self.generators.contains(&name) {
                return Err(syntax(pos, format!("duplicate generator '{name}'")));
            }
            self.generators.push(name);
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b'|') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(syntax(self.pos, "expected ',' or '|' after generator")),
            }
        }
        let mut relators: Vec<Word> = Vec::new();
        loop {
            let chain = self.rel_chain()?;
            if chain.len() == 1 {
                relators.push(chain.into_iter().next().unwrap());
            } else {
                for pair in chain.windows(2) {
                    let mut rel = pair[0].clone();
                    rel.extend(invert_word(&pair[1]));
                    relators.push(rel);
                }
            }
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b'>') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(syntax(self.pos, "expected ',' or '>' after relator")),
            }
        }
        self.skip_ws();
        if self.pos != self.bytes.len() {
            return Err(syntax(self.pos, "trailing input after '>'"));
        }
        Presentation::new(self.generators, relators)
    }

    fn rel_chain(&mut self) -> Result<Vec<Word>, ParseError> {
        let mut words = vec![self.word()?];
        while self.peek() == Some(b'=') {
            self.pos += 1;
            words.push(self.word()?);
        }
        Ok(words)
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut letters: Word = Vec::new();
        loop {
            self.factor(&mut letters)?;
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'1' => {}
                _ => break,
            }
        }
        Ok(letters)
    }

    fn factor(&mut self, out: &mut Word) -> Result<(), ParseError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(());
        }
        let (pos, name) = self.ident()?;
        let gens = self.split_generators(&name).ok_or(ParseError::UnknownGenerator {
            pos,
            name: name.clone(),
        })?;
        let exponent = if self.bytes.get(self.pos) == Some(&b'^') {
            self.pos += 1;
            self.integer()?
        } else {
            1
        };
        // an exponent binds to the last generator of a juxtaposed run
        let (head, last) = gens.split_at(gens.len() - 1);
        for &g in head {
            out.push(Letter {
                gen: g,
                inverse: false,
            });
        }
        let letter = Letter {
            gen: last[0],
            inverse: exponent < 0,
        };
        for _ in 0..exponent.unsigned_abs() {
            out.push(letter);
        }
        Ok(())
    }

    /// Splits a juxtaposed identifier like `bab` into declared generator
    /// names, longest match first with backtracking.
    fn split_generators(&self, name: &str) -> Option<Vec<usize>> {
        if name.is_empty() {
            return Some(Vec::new());
        }
        let mut candidates: Vec<usize> = (0..self.generators.len())
            .filter(|&g| name.starts_with(self.generators[g].as_str()))
            .collect();
        candidates.sort_by_key(|&g| std::cmp::Reverse(self.generators[g].len()));
        for g in candidates {
            if let Some(mut rest) = self.split_generators(&name[self.generators[g].len()..]) {
                let mut out = vec![g];
                out.append(&mut rest);
                return Some(out);
            }
        }
        None
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid parameters: {0}")]
pub struct InvalidParams(pub String);

/// The built-in group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Dihedral,
    Quaternion,
    SemiDihedral,
    QuasiDihedral,
    V8n,
    U6n,
    M2mn,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Dihedral,
        Family::Quaternion,
        Family::SemiDihedral,
        Family::QuasiDihedral,
        Family::V8n,
        Family::U6n,
        Family::M2mn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::SemiDihedral => "semidihedral",
            Family::QuasiDihedral => "qd",
            Family::V8n => "v8n",
            Family::U6n => "u6n",
            Family::M2mn => "m2mn",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family member: the family tag plus its parameter list (`[n]`, or
/// `[m, n]` for the two-parameter family).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    family: Family,
    params: Vec<u64>,
}

// Parameters large enough to overflow the 128-bit Zagreb polynomial
// evaluations are rejected up front; coset enumeration would blow its budget
// many orders of magnitude earlier anyway.
const MAX_N: u64 = 1 << 20;
const MAX_QD_M: u64 = 23;

impl FamilySpec {
    pub fn new(family: Family, params: &[u64]) -> Result<Self, InvalidParams> {
        let arity = if family == Family::M2mn { 2 } else { 1 };
        if params.len() != arity {
            return Err(InvalidParams(format!(
                "{family} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let err = |msg: String| Err(InvalidParams(msg));
        match family {
            Family::Dihedral if params[0] < 3 => return err(format!("n = {} < 3", params[0])),
            Family::Quaternion | Family::SemiDihedral | Family::V8n if params[0] < 2 => {
                return err(format!("n = {} < 2", params[0]))
            }
            Family::QuasiDihedral if params[0] < 4 => return err(format!("m = {} < 4", params[0])),
            Family::QuasiDihedral if params[0] > MAX_QD_M => {
                return err(format!("m = {} too large (order 2^m overflows)", params[0]))
            }
            Family::U6n if params[0] < 1 => return err("n = 0 < 1".to_string()),
            Family::M2mn if params[0] < 3 => return err(format!("m = {} < 3", params[0])),
            Family::M2mn if params[0] == 4 => return err("m = 4 is excluded".to_string()),
            Family::M2mn if params[1] < 1 => return err("n = 0 < 1".to_string()),
            _ => {}
        }
        if params.iter().any(|&p| p > MAX_N) {
            return err(format!("parameter exceeds supported maximum {MAX_N}"));
        }
        if family == Family::M2mn && params[0].saturating_mul(params[1]) > MAX_N {
            return err(format!("m * n exceeds supported maximum {MAX_N}"));
        }
        Ok(FamilySpec {
            family,
            params: params.to_vec(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[u64] {
        &self.params
    }

    /// The single parameter `n`, or the second parameter for `M2mn`.
    pub fn n(&self) -> u64 {
        match self.family {
            Family::M2mn => self.params[1],
            _ => self.params[0],
        }
    }

    /// The parameter `m` (`QuasiDihedral` and `M2mn` only).
    pub fn m(&self) -> u64 {
        self.params[0]
    }

    pub fn expected_order(&self) -> u64 {
        match self.family {
            Family::Dihedral => 2 * self.n(),
            Family::Quaternion => 4 * self.n(),
            Family::SemiDihedral | Family::V8n => 8 * self.n(),
            Family::QuasiDihedral => 1u64 << self.m(),
            Family::U6n => 6 * self.n(),
            Family::M2mn => 2 * self.m() * self.n(),
        }
    }

    fn presentation_text(&self) -> String {
        match self.family {
            Family::Dihedral => {
                format!("<a,b | a^{} = b^2 = 1, b*a*b^-1 = a^-1>", self.n())
            }
            Family::Quaternion => {
                let n = self.n();
                format!("<a,b | a^{} = 1, a^{} = b^2, b*a*b^-1 = a^-1>", 2 * n, n)
            }
            Family::SemiDihedral => {
                let n = self.n();
                format!(
                    "<a,b | a^{} = b^2 = 1, b*a*b^-1 = a^{}>",
                    4 * n,
                    2 * n - 1
                )
            }
            Family::QuasiDihedral => {
                let m = self.m();
                format!(
                    "<a,b | a^{} = b^2 = 1, b*a*b^-1 = a^{}>",
                    1u64 << (m - 1),
                    (1u64 << (m - 2)) - 1
                )
            }
            Family::V8n => {
                let n = self.n();
                format!(
                    "<a,b | a^{} = b^4 = 1, b*a = a^-1*b^-1, b^-1*a = a^-1*b>",
                    2 * n
                )
            }
            Family::U6n => {
                format!("<a,b | a^{} = b^3 = 1, a^-1*b*a = b^-1>", 2 * self.n())
            }
            Family::M2mn => {
                format!(
                    "<a,b | a^{} = b^{} = 1, b*a*b^-1 = a^-1>",
                    self.m(),
                    2 * self.n()
                )
            }
        }
    }

    /// The family's defining presentation with parameters substituted.
    pub fn presentation(&self) -> Presentation {
        Presentation::parse(&self.presentation_text()).expect("catalog presentations parse")
    }

    /// Parameter rendering used in reports, e.g. `n=5` or `m=3;n=2`.
    pub fn params_label(&self) -> String {
        match self.family {
            Family::M2mn => format!("m={};n={}", self.m(), self.n()),
            Family::QuasiDihedral => format!("m={}", self.m()),
            _ => format!("n={}", self.n()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.params_label())
    }
}
