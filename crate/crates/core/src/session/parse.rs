//! The line-oriented session format.
//!
//! ```text
//! ring p=<prime> vars=<id,...> order=<grevlex|lex>
//! ideal <name> = <poly>, <poly>, ...
//! map <name> = level <e> mult <poly> [ambient <ideal-name>]
//! triple <name> = map <map-name> a <poly> t <num>/<den>
//! check|compute|verify <subcommand> <args>
//! ```
//! `#` starts a comment. Command arguments are separated by whitespace;
//! double quotes group an argument containing spaces. An ideal argument is
//! a declared name or a literal such as `(x,y)`.

use crate::adjunction::CenterMode;
use crate::algebra::{parse_poly, MonomialOrder, Poly, Ring, RingRef};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::maps::rational::{parse_rational, Rational};
use crate::maps::{DivisorData, MapDatum, TripleSpec};

/// A parsed session: one ring, named objects, and the commands to run.
#[derive(Clone, Debug)]
pub struct Session {
    pub ring: RingRef,
    pub ideals: Vec<(String, Ideal)>,
    pub maps: Vec<(String, MapDatum)>,
    pub triples: Vec<(String, TripleSpec)>,
    pub commands: Vec<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Check,
    Compute,
    Verify,
}

#[derive(Clone, Debug)]
pub struct Command {
    pub line: usize,
    /// The command as written, without the verb.
    pub text: String,
    pub verb: Verb,
    pub op: Op,
}

/// What a test-ideal command iterates.
#[derive(Clone, Debug)]
pub enum Target {
    Map(MapDatum),
    Triple(TripleSpec),
}

/// A resolved command.
#[derive(Clone, Debug)]
pub enum Op {
    FrobPower { ideal: Ideal, q: u64 },
    FrobRoot { ideal: Ideal, q: u64 },
    Trace { f: Poly, e: u32 },
    Fedder { ideal: Ideal, e: u32 },
    FPure { ideal: Ideal, e: u32, at: Option<Ideal> },
    ExtractGen { ideal: Ideal, e: u32 },
    Compose { map: MapDatum, n: u32 },
    Compat { map: MapDatum, ideal: Ideal },
    Image { map: MapDatum, ideal: Option<Ideal> },
    SurjectiveAt { map: MapDatum, prime: Ideal },
    Divisor { map: MapDatum, attested: Vec<Poly> },
    MapOfDivisor { divisor: DivisorData },
    Restrict { map: MapDatum, q: Ideal },
    PurityTransfer { map: MapDatum, q: Ideal, m: Ideal },
    CenterBijection { map: MapDatum, q: Ideal, candidates: Vec<Ideal> },
    SharpPure { triple: TripleSpec, m: Ideal },
    TestIdeal { target: Target, seeds: Option<Ideal> },
    TestIdealOutside { triple: TripleSpec, q: Ideal, seed: Option<Poly> },
    RestrictionCheck { triple: TripleSpec, q: Ideal, seed: Option<Poly> },
    Enumerate { map: MapDatum, mode: CenterMode },
    Codim1 { ideal: Ideal, h: Poly, e: u32 },
    ColonLa { i: Ideal, j: Ideal, bound: u32 },
    DirectSum { target: Target, seeds: Option<Ideal> },
    BruteCenters { map: MapDatum, family: Vec<Ideal>, attested: Vec<Poly> },
    Multinomial { h: Poly },
    MonomialTau { g: Poly, t: Rational },
}

/// Every subcommand name, in the order they are documented.
pub const SUBCOMMANDS: &[&str] = &[
    "frobpower",
    "frobroot",
    "trace",
    "fedder",
    "fpure",
    "extract-gen",
    "compose",
    "compat",
    "image",
    "surjective-at",
    "divisor",
    "map-of-divisor",
    "restrict",
    "purity-transfer",
    "center-bijection",
    "sharp-pure",
    "testideal",
    "testideal-outside",
    "restriction-check",
    "enumerate",
    "codim1-check",
    "colon-la",
    "direct-sum",
    "brute-centers",
    "multinomial",
    "monomial-tau",
];

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Re-anchors an error from a sub-parser at `line`, shifting its column by
/// `offset`.
fn relocate(e: Error, line: usize, offset: usize) -> Error {
    match e {
        Error::Parse { col, msg, .. } => err(line, offset + col, msg),
        other => err(line, offset + 1, other.to_string()),
    }
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    col: usize,
}

fn tokenize(src: &str, line: usize, offset: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '"' {
            let start = pos + 1;
            let mut j = i + 1;
            while j < chars.len() && chars[j].1 != '"' {
                j += 1;
            }
            if j == chars.len() {
                return Err(err(line, offset + pos + 1, "unterminated quote"));
            }
            out.push(Token {
                text: src[start..chars[j].0].to_string(),
                col: offset + start + 1,
            });
            i = j + 1;
        } else {
            let mut j = i;
            while j < chars.len() && !chars[j].1.is_whitespace() {
                j += 1;
            }
            let end = chars.get(j).map_or(src.len(), |c| c.0);
            out.push(Token {
                text: src[pos..end].to_string(),
                col: offset + pos + 1,
            });
            i = j;
        }
    }
    Ok(out)
}

struct Builder {
    ring: Option<RingRef>,
    ideals: Vec<(String, Ideal)>,
    maps: Vec<(String, MapDatum)>,
    triples: Vec<(String, TripleSpec)>,
}

impl Builder {
    fn ring(&self, line: usize) -> Result<&RingRef> {
        self.ring
            .as_ref()
            .ok_or_else(|| err(line, 1, "a `ring` declaration must come first"))
    }

    fn name_taken(&self, name: &str) -> bool {
        self.ideals.iter().any(|(n, _)| n == name)
            || self.maps.iter().any(|(n, _)| n == name)
            || self.triples.iter().any(|(n, _)| n == name)
    }

    fn poly(&self, line: usize, col: usize, text: &str) -> Result<Poly> {
        parse_poly(self.ring(line)?, text).map_err(|e| relocate(e, line, col - 1))
    }

    fn ideal_literal(&self, line: usize, col: usize, text: &str) -> Result<Ideal> {
        let ring = self.ring(line)?;
        let inner = text.trim();
        let (body, shift) = match inner.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(b) => (b, 1),
            None => (inner, 0),
        };
        let mut gens = Vec::new();
        let mut start = 0;
        for piece in body.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            if !piece.trim().is_empty() {
                gens.push(self.poly(line, col + shift + start + lead, piece.trim())?);
            }
            start += piece.len() + 1;
        }
        Ideal::new(ring, gens).map_err(|e| relocate(e, line, col - 1))
    }

    fn ideal(&self, line: usize, tok: &Token) -> Result<Ideal> {
        if let Some((_, i)) = self.ideals.iter().find(|(n, _)| *n == tok.text) {
            return Ok(i.clone());
        }
        if tok.text.starts_with('(') {
            return self.ideal_literal(line, tok.col, &tok.text);
        }
        Err(err(line, tok.col, format!("unknown ideal `{}`", tok.text)))
    }

    fn map(&self, line: usize, tok: &Token) -> Result<MapDatum> {
        self.maps
            .iter()
            .find(|(n, _)| *n == tok.text)
            .map(|(_, m)| m.clone())
            .ok_or_else(|| err(line, tok.col, format!("unknown map `{}`", tok.text)))
    }

    fn triple(&self, line: usize, tok: &Token) -> Result<TripleSpec> {
        if let Some((_, t)) = self.triples.iter().find(|(n, _)| *n == tok.text) {
            return Ok(t.clone());
        }
        let map = self
            .map(line, tok)
            .map_err(|_| err(line, tok.col, format!("unknown map or triple `{}`", tok.text)))?;
        untwisted(map).map_err(|e| relocate(e, line, tok.col - 1))
    }

    fn target(&self, line: usize, tok: &Token) -> Result<Target> {
        if let Some((_, t)) = self.triples.iter().find(|(n, _)| *n == tok.text) {
            return Ok(Target::Triple(t.clone()));
        }
        self.map(line, tok)
            .map(Target::Map)
            .map_err(|_| err(line, tok.col, format!("unknown map or triple `{}`", tok.text)))
    }
}

/// A map viewed as a triple with the trivial twist `(1)^1`.
pub(crate) fn untwisted(map: MapDatum) -> Result<TripleSpec> {
    let one = Poly::one(map.ring());
    TripleSpec::new(map, one, Rational::from_integer(1))
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `<name> = <rest>`, returning the name and the column of `rest`.
fn binding(rest: &str, line: usize, offset: usize) -> Result<(&str, &str, usize)> {
    let Some(eq) = rest.find('=') else {
        return Err(err(line, offset + 1, "expected `<name> = ...`"));
    };
    let name = rest[..eq].trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(err(line, offset + 1, format!("invalid name `{name}`")));
    }
    let body = &rest[eq + 1..];
    let lead = body.len() - body.trim_start().len();
    Ok((name, body.trim(), offset + eq + 1 + lead))
}

fn parse_ring(rest: &str, line: usize, offset: usize) -> Result<RingRef> {
    let mut p = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = MonomialOrder::GrevLex;
    for tok in tokenize(rest, line, offset)? {
        let Some((k, v)) = tok.text.split_once('=') else {
            return Err(err(line, tok.col, format!("expected key=value, found `{}`", tok.text)));
        };
        match k {
            "p" => {
                p = Some(
                    v.parse::<u64>()
                        .map_err(|_| err(line, tok.col, format!("`{v}` is not an integer")))?,
                )
            }
            "vars" => vars = Some(v.split(',').map(|s| s.trim().to_string()).collect()),
            "order" => {
                order = MonomialOrder::parse(v)
                    .ok_or_else(|| err(line, tok.col, format!("unknown order `{v}`")))?
            }
            _ => return Err(err(line, tok.col, format!("unknown ring option `{k}`"))),
        }
    }
    let p = p.ok_or_else(|| err(line, offset + 1, "missing p=<prime>"))?;
    let vars = vars.ok_or_else(|| err(line, offset + 1, "missing vars=<names>"))?;
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    Ring::new(p, &names, order).map_err(|e| err(line, offset + 1, e.to_string()))
}

fn keyword_split<'a>(body: &'a str, kw: &str) -> Option<(&'a str, &'a str)> {
    let pat = format!(" {kw} ");
    let padded_end = format!(" {kw}");
    if let Some(i) = body.find(&pat) {
        return Some((&body[..i], &body[i + pat.len()..]));
    }
    body.strip_suffix(&padded_end).map(|b| (b, ""))
}

/// Parses a session text. Every name must be declared before use.
pub fn parse_session(text: &str) -> Result<Session> {
    let mut b = Builder {
        ring: None,
        ideals: Vec::new(),
        maps: Vec::new(),
        triples: Vec::new(),
    };
    let mut commands = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (head, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_off = indent + head.len() + 1;
        match head {
            "ring" => {
                if b.ring.is_some() {
                    return Err(err(line, indent + 1, "only one ring per session"));
                }
                b.ring = Some(parse_ring(rest, line, rest_off)?);
            }
            "ideal" => {
                let (name, body, col) = binding(rest, line, rest_off)?;
                if b.name_taken(name) {
                    return Err(err(line, rest_off + 1, format!("name `{name}` already declared")));
                }
                let ideal = b.ideal_literal(line, col + 1, body)?;
                b.ideals.push((name.to_string(), ideal));
            }
            "map" => {
                let (name, body, col) = binding(rest, line, rest_off)?;
                if b.name_taken(name) {
                    return Err(err(line, rest_off + 1, format!("name `{name}` already declared")));
                }
                let map = parse_map(&b, body, line, col)?;
                b.maps.push((name.to_string(), map));
            }
            "triple" => {
                let (name, body, col) = binding(rest, line, rest_off)?;
                if b.name_taken(name) {
                    return Err(err(line, rest_off + 1, format!("name `{name}` already declared")));
                }
                let triple = parse_triple(&b, body, line, col)?;
                b.triples.push((name.to_string(), triple));
            }
            "check" | "compute" | "verify" => {
                let verb = match head {
                    "check" => Verb::Check,
                    "compute" => Verb::Compute,
                    _ => Verb::Verify,
                };
                b.ring(line)?;
                let toks = tokenize(rest, line, rest_off)?;
                let op = parse_op(&b, &toks, line, rest_off)?;
                commands.push(Command {
                    line,
                    text: rest.trim().to_string(),
                    verb,
                    op,
                });
            }
            other => return Err(err(line, indent + 1, format!("unknown statement `{other}`"))),
        }
    }
    let ring = b.ring.ok_or_else(|| err(1, 1, "missing `ring` declaration"))?;
    Ok(Session {
        ring,
        ideals: b.ideals,
        maps: b.maps,
        triples: b.triples,
        commands,
    })
}

fn parse_map(b: &Builder, body: &str, line: usize, col: usize) -> Result<MapDatum> {
    let ring = b.ring(line)?;
    let rest = body
        .strip_prefix("level ")
        .ok_or_else(|| err(line, col + 1, "expected `level <e> mult <poly>`"))?;
    let (e_text, rest) = rest
        .trim_start()
        .split_once(char::is_whitespace)
        .ok_or_else(|| err(line, col + 1, "expected `level <e> mult <poly>`"))?;
    let e: u32 = e_text
        .parse()
        .map_err(|_| err(line, col + 7, format!("`{e_text}` is not a level")))?;
    let rest = rest.trim_start();
    let mult = rest
        .strip_prefix("mult ")
        .ok_or_else(|| err(line, col + 1, "expected `mult <poly>`"))?;
    let mult_col = col + body.len() - mult.len();
    let (poly_text, ambient) = match keyword_split(mult, "ambient") {
        Some((p, a)) => (p, Some(a.trim())),
        None => (mult, None),
    };
    let f = b.poly(line, mult_col + 1, poly_text.trim())?;
    let modulus = match ambient {
        Some(name) => b
            .ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i.clone())
            .ok_or_else(|| err(line, col + 1, format!("unknown ideal `{name}`")))?,
        None => Ideal::zero(ring),
    };
    MapDatum::new(modulus, e, f).map_err(|e| err(line, col + 1, e.to_string()))
}

fn parse_triple(b: &Builder, body: &str, line: usize, col: usize) -> Result<TripleSpec> {
    let bad = || err(line, col + 1, "expected `map <name> a <poly> t <num>/<den>`");
    let rest = body.strip_prefix("map ").ok_or_else(bad)?;
    let (name, rest) = rest.trim_start().split_once(char::is_whitespace).ok_or_else(bad)?;
    let map = b.map(
        line,
        &Token {
            text: name.to_string(),
            col: col + 5,
        },
    )?;
    let rest = rest.trim_start().strip_prefix("a ").ok_or_else(bad)?;
    let (g_text, t_text) = keyword_split(rest, "t").ok_or_else(bad)?;
    let g_col = col + body.len() - rest.len();
    let g = b.poly(line, g_col + 1, g_text.trim())?;
    let t = parse_rational(t_text.trim()).map_err(|e| err(line, col + 1, e.to_string()))?;
    TripleSpec::new(map, g, t).map_err(|e| err(line, col + 1, e.to_string()))
}

struct Args<'a> {
    b: &'a Builder,
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Args<'a> {
    fn next(&mut self, what: &str) -> Result<&'a Token> {
        let t = self
            .toks
            .get(self.pos)
            .ok_or_else(|| err(self.line, self.end_col, format!("missing argument: {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn peek_is(&self, kw: &str) -> bool {
        self.toks.get(self.pos).is_some_and(|t| t.text == kw)
    }

    fn done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn finish(&self) -> Result<()> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(err(self.line, t.col, format!("unexpected argument `{}`", t.text))),
        }
    }

    fn ideal(&mut self) -> Result<Ideal> {
        let t = self.next("ideal")?;
        self.b.ideal(self.line, t)
    }

    fn map(&mut self) -> Result<MapDatum> {
        let t = self.next("map")?;
        self.b.map(self.line, t)
    }

    fn triple(&mut self) -> Result<TripleSpec> {
        let t = self.next("map or triple")?;
        self.b.triple(self.line, t)
    }

    fn target(&mut self) -> Result<Target> {
        let t = self.next("map or triple")?;
        self.b.target(self.line, t)
    }

    fn poly(&mut self) -> Result<Poly> {
        let t = self.next("polynomial")?;
        self.b.poly(self.line, t.col, &t.text)
    }

    fn int<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        let t = self.next(what)?;
        t.text
            .parse()
            .map_err(|_| err(self.line, t.col, format!("`{}` is not a valid {what}", t.text)))
    }

    fn rational(&mut self) -> Result<Rational> {
        let t = self.next("rational")?;
        parse_rational(&t.text).map_err(|e| err(self.line, t.col, e.to_string()))
    }

    fn ideals_rest(&mut self) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        while !self.done() && !self.peek_is("attested") {
            out.push(self.ideal()?);
        }
        Ok(out)
    }

    fn polys_rest(&mut self) -> Result<Vec<Poly>> {
        let mut out = Vec::new();
        while !self.done() {
            out.push(self.poly()?);
        }
        Ok(out)
    }

    fn optional_seed_poly(&mut self) -> Result<Option<Poly>> {
        if self.peek_is("seed") {
            self.pos += 1;
            return Ok(Some(self.poly()?));
        }
        Ok(None)
    }

    fn optional_seed_ideal(&mut self) -> Result<Option<Ideal>> {
        if self.peek_is("seed") {
            self.pos += 1;
            return Ok(Some(self.ideal()?));
        }
        Ok(None)
    }

    fn optional_attested(&mut self) -> Result<Vec<Poly>> {
        if self.peek_is("attested") {
            self.pos += 1;
            return self.polys_rest();
        }
        Ok(Vec::new())
    }
}

fn parse_divisor(args: &mut Args<'_>) -> Result<DivisorData> {
    let e: u32 = args.int("level")?;
    let mut comps = Vec::new();
    while !args.done() {
        let t = args.next("component <poly>:<coefficient>")?;
        let (h, c) = t.text.rsplit_once(':').ok_or_else(|| {
            err(args.line, t.col, "expected a component `<poly>:<coefficient>`")
        })?;
        let h = args.b.poly(args.line, t.col, h)?;
        let c = parse_rational(c).map_err(|e| err(args.line, t.col, e.to_string()))?;
        comps.push((h, c));
    }
    DivisorData::new(e, comps).map_err(|e| err(args.line, args.end_col, e.to_string()))
}

fn parse_op(b: &Builder, toks: &[Token], line: usize, offset: usize) -> Result<Op> {
    let Some(sub) = toks.first() else {
        return Err(err(line, offset, "missing subcommand"));
    };
    let end_col = toks.last().map_or(offset, |t| t.col + t.text.len());
    let mut a = Args {
        b,
        toks,
        pos: 1,
        line,
        end_col,
    };
    let op = match sub.text.as_str() {
        "frobpower" => Op::FrobPower {
            ideal: a.ideal()?,
            q: a.int("q")?,
        },
        "frobroot" => Op::FrobRoot {
            ideal: a.ideal()?,
            q: a.int("q")?,
        },
        "trace" => Op::Trace {
            f: a.poly()?,
            e: a.int("level")?,
        },
        "fedder" => Op::Fedder {
            ideal: a.ideal()?,
            e: a.int("level")?,
        },
        "fpure" => Op::FPure {
            ideal: a.ideal()?,
            e: a.int("level")?,
            at: if a.done() { None } else { Some(a.ideal()?) },
        },
        "extract-gen" => Op::ExtractGen {
            ideal: a.ideal()?,
            e: a.int("level")?,
        },
        "compose" => Op::Compose {
            map: a.map()?,
            n: a.int("composition count")?,
        },
        "compat" => Op::Compat {
            map: a.map()?,
            ideal: a.ideal()?,
        },
        "image" => Op::Image {
            map: a.map()?,
            ideal: if a.done() { None } else { Some(a.ideal()?) },
        },
        "surjective-at" => Op::SurjectiveAt {
            map: a.map()?,
            prime: a.ideal()?,
        },
        "divisor" => Op::Divisor {
            map: a.map()?,
            attested: a.optional_attested()?,
        },
        "map-of-divisor" => Op::MapOfDivisor {
            divisor: parse_divisor(&mut a)?,
        },
        "restrict" => Op::Restrict {
            map: a.map()?,
            q: a.ideal()?,
        },
        "purity-transfer" => Op::PurityTransfer {
            map: a.map()?,
            q: a.ideal()?,
            m: a.ideal()?,
        },
        "center-bijection" => Op::CenterBijection {
            map: a.map()?,
            q: a.ideal()?,
            candidates: a.ideals_rest()?,
        },
        "sharp-pure" => Op::SharpPure {
            triple: a.triple()?,
            m: a.ideal()?,
        },
        "testideal" => Op::TestIdeal {
            target: a.target()?,
            seeds: a.optional_seed_ideal()?,
        },
        "testideal-outside" => Op::TestIdealOutside {
            triple: a.triple()?,
            q: a.ideal()?,
            seed: a.optional_seed_poly()?,
        },
        "restriction-check" => Op::RestrictionCheck {
            triple: a.triple()?,
            q: a.ideal()?,
            seed: a.optional_seed_poly()?,
        },
        "enumerate" => {
            let map = a.map()?;
            let mode = a.next("mode (auto or candidates)")?;
            let mode = match mode.text.as_str() {
                "auto" => CenterMode::Auto {
                    attested: a.optional_attested()?,
                },
                "candidates" => CenterMode::Candidates(a.ideals_rest()?),
                other => {
                    return Err(err(line, mode.col, format!("unknown mode `{other}`")));
                }
            };
            Op::Enumerate { map, mode }
        }
        "codim1-check" => Op::Codim1 {
            ideal: a.ideal()?,
            h: a.poly()?,
            e: a.int("level")?,
        },
        "colon-la" => Op::ColonLa {
            i: a.ideal()?,
            j: a.ideal()?,
            bound: a.int("degree bound")?,
        },
        "direct-sum" => Op::DirectSum {
            target: a.target()?,
            seeds: a.optional_seed_ideal()?,
        },
        "brute-centers" => {
            let map = a.map()?;
            let family = a.ideals_rest()?;
            Op::BruteCenters {
                map,
                family,
                attested: a.optional_attested()?,
            }
        }
        "multinomial" => Op::Multinomial { h: a.poly()? },
        "monomial-tau" => Op::MonomialTau {
            g: a.poly()?,
            t: a.rational()?,
        },
        other => {
            return Err(err(line, sub.col, format!("unknown subcommand `{other}`")));
        }
    };
    a.finish()?;
    Ok(op)
}
