use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::coeff::{self, Coeff};
use super::universe::{Coord, Symbol, SymbolKind, Universe};
use super::PolyError;

/// Exponent vector over the universe, ordered graded-lexicographically:
/// total degree first, then a larger exponent on an earlier symbol wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial { degree: 0, exps: vec![0; len].into_boxed_slice() }
    }

    fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { degree: exps.iter().sum(), exps: exps.into_boxed_slice() }
    }

    pub fn exponent(&self, s: Symbol) -> u32 {
        self.exps[s.slot()]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product with reciprocal pairs cancelled.
    fn mul(&self, other: &Monomial, u: &Universe) -> Monomial {
        let mut exps: Vec<u32> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        cancel_inverses(&mut exps, u);
        Monomial::from_exps(exps)
    }
}

fn cancel_inverses(exps: &mut [u32], u: &Universe) {
    for s in u.symbols() {
        if u.kind(s) == SymbolKind::Constant {
            if let Some(inv) = u.partner(s) {
                let k = exps[s.slot()].min(exps[inv.slot()]);
                exps[s.slot()] -= k;
                exps[inv.slot()] -= k;
            }
        }
    }
}

/// Exact multivariate polynomial with Gaussian-rational coefficients.
///
/// Terms are kept canonical: no zero coefficients, monomials unique, sorted.
#[derive(Clone)]
pub struct PolyExpr {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PolyExpr {
    pub fn zero(u: &Arc<Universe>) -> Self {
        PolyExpr { universe: u.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(u: &Arc<Universe>, c: Coeff) -> Self {
        let mut p = Self::zero(u);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(u.len()), c);
        }
        p
    }

    pub fn one(u: &Arc<Universe>) -> Self {
        Self::constant(u, Coeff::one())
    }

    pub fn rational(u: &Arc<Universe>, num: i64, den: i64) -> Self {
        Self::constant(u, coeff::real(num, den))
    }

    pub fn i(u: &Arc<Universe>) -> Self {
        Self::constant(u, coeff::i_unit())
    }

    pub fn symbol(u: &Arc<Universe>, s: Symbol) -> Self {
        let mut exps = vec![0; u.len()];
        exps[s.slot()] = 1;
        let mut p = Self::zero(u);
        p.terms.insert(Monomial::from_exps(exps), Coeff::one());
        p
    }

    /// Symbol by name; panics on an unknown name.
    pub fn var(u: &Arc<Universe>, name: &str) -> Self {
        Self::symbol(u, u.symbol(name).unwrap_or_else(|e| panic!("{e}")))
    }

    pub fn coord(u: &Arc<Universe>, c: Coord) -> Self {
        Self::symbol(u, u.coord(c))
    }

    /// Builds a single term from a coefficient and `(symbol, exponent)` factors.
    pub fn term(u: &Arc<Universe>, c: Coeff, factors: &[(Symbol, u32)]) -> Self {
        let mut exps = vec![0; u.len()];
        for &(s, e) in factors {
            exps[s.slot()] += e;
        }
        cancel_inverses(&mut exps, u);
        let mut p = Self::zero(u);
        if !c.is_zero() {
            p.terms.insert(Monomial::from_exps(exps), c);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order, as printed.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    /// True when no coordinate appears.
    pub fn is_coordinate_free(&self) -> bool {
        Coord::ALL.iter().all(|&c| self.degree_in(self.universe.coord(c)) == 0)
    }

    /// The value of a polynomial with only a constant term.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check(&self, other: &PolyExpr) -> Result<(), PolyError> {
        if Universe::same(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(PolyError::UniverseMismatch)
        }
    }

    fn insert(terms: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    terms.remove(&m);
                }
            }
            None => {
                terms.insert(m, c);
            }
        }
    }

    pub fn try_add(&self, other: &PolyExpr) -> Result<PolyExpr, PolyError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert(&mut terms, m.clone(), c.clone());
        }
        Ok(PolyExpr { universe: self.universe.clone(), terms })
    }

    pub fn try_sub(&self, other: &PolyExpr) -> Result<PolyExpr, PolyError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert(&mut terms, m.clone(), -c);
        }
        Ok(PolyExpr { universe: self.universe.clone(), terms })
    }

    pub fn try_mul(&self, other: &PolyExpr) -> Result<PolyExpr, PolyError> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert(&mut terms, ma.mul(mb, &self.universe), ca * cb);
            }
        }
        Ok(PolyExpr { universe: self.universe.clone(), terms })
    }

    /// Multiplies by another polynomial that must be a single term.
    pub fn scale(&self, factor: &PolyExpr) -> Result<PolyExpr, PolyError> {
        if factor.len() != 1 {
            return Err(PolyError::NotAMonomial);
        }
        self.try_mul(factor)
    }

    pub fn scale_coeff(&self, c: &Coeff) -> PolyExpr {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        PolyExpr {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> PolyExpr {
        let mut acc = Self::one(&self.universe);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugate; every symbol is treated as real.
    pub fn conj(&self) -> PolyExpr {
        PolyExpr {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Formal partial derivative with respect to a coordinate.
    pub fn partial(&self, var: Symbol) -> Result<PolyExpr, PolyError> {
        if !matches!(self.universe.kind(var), SymbolKind::Coordinate(_)) {
            return Err(PolyError::InvalidVariable(self.universe.name(var).to_string()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps.to_vec();
            exps[var.slot()] -= 1;
            Self::insert(&mut terms, Monomial::from_exps(exps), c * coeff::real(e as i64, 1));
        }
        Ok(PolyExpr { universe: self.universe.clone(), terms })
    }

    pub fn d(&self, c: Coord) -> PolyExpr {
        self.partial(self.universe.coord(c)).expect("coordinates are differentiable")
    }

    /// Replaces constants by polynomials; bindings may chain but not cycle.
    ///
    /// A binding for an invertible constant also rewrites its reciprocal when the
    /// bound value is a single term whose factors are all invertible.
    pub fn substitute(&self, bindings: &BTreeMap<Symbol, PolyExpr>) -> Result<PolyExpr, PolyError> {
        let u = &self.universe;
        for (s, v) in bindings {
            self.check(v)?;
            if matches!(u.kind(*s), SymbolKind::Coordinate(_)) {
                return Err(PolyError::InvalidVariable(u.name(*s).to_string()));
            }
        }
        check_acyclic(u, bindings)?;
        let mut full = bindings.clone();
        for (s, v) in bindings {
            if let Some(p) = u.partner(*s) {
                if !bindings.contains_key(&p) {
                    if let Ok(r) = v.reciprocal() {
                        full.insert(p, r);
                    }
                }
            }
        }
        let mut cur = self.clone();
        for _ in 0..=full.len() {
            if !full.keys().any(|s| cur.degree_in(*s) > 0) {
                break;
            }
            cur = cur.apply_once(&full);
        }
        if let Some(s) = u.symbols().find(|s| {
            cur.degree_in(*s) > 0 && u.partner(*s).is_some_and(|p| bindings.contains_key(&p))
        }) {
            return Err(PolyError::NotInvertible(u.name(s).to_string()));
        }
        Ok(cur)
    }

    fn apply_once(&self, map: &BTreeMap<Symbol, PolyExpr>) -> PolyExpr {
        let u = &self.universe;
        let mut result = Self::zero(u);
        for (m, c) in &self.terms {
            let mut rest = vec![0u32; u.len()];
            let mut term = Self::zero(u);
            let mut bound = Vec::new();
            for s in u.symbols() {
                let e = m.exponent(s);
                match (e, map.get(&s)) {
                    (0, _) => {}
                    (_, Some(v)) => bound.push((v, e)),
                    (_, None) => rest[s.slot()] = e,
                }
            }
            term.terms.insert(Monomial::from_exps(rest), c.clone());
            for (v, e) in bound {
                term = &term * &v.pow(e);
            }
            result = &result + &term;
        }
        result
    }

    /// Reciprocal of a single term whose symbol factors are all invertible.
    pub fn reciprocal(&self) -> Result<PolyExpr, PolyError> {
        let (m, c) = match (self.terms.len(), self.terms.iter().next()) {
            (1, Some(t)) => t,
            _ => return Err(PolyError::NotAMonomial),
        };
        let u = &self.universe;
        let mut factors = Vec::new();
        for s in u.symbols() {
            let e = m.exponent(s);
            if e > 0 {
                factors.push((u.inverse(s)?, e));
            }
        }
        Ok(Self::term(u, Coeff::one() / c, &factors))
    }
}

fn check_acyclic(u: &Arc<Universe>, bindings: &BTreeMap<Symbol, PolyExpr>) -> Result<(), PolyError> {
    let key_of = |d: Symbol| -> Option<Symbol> {
        if bindings.contains_key(&d) {
            Some(d)
        } else {
            u.partner(d).filter(|p| bindings.contains_key(p))
        }
    };
    fn visit(
        s: Symbol,
        u: &Arc<Universe>,
        bindings: &BTreeMap<Symbol, PolyExpr>,
        key_of: &dyn Fn(Symbol) -> Option<Symbol>,
        done: &mut BTreeSet<Symbol>,
        stack: &mut BTreeSet<Symbol>,
    ) -> Result<(), PolyError> {
        if done.contains(&s) {
            return Ok(());
        }
        if !stack.insert(s) {
            return Err(PolyError::Cycle(u.name(s).to_string()));
        }
        let value = &bindings[&s];
        for d in u.symbols().filter(|d| value.degree_in(*d) > 0) {
            if let Some(k) = key_of(d) {
                visit(k, u, bindings, key_of, done, stack)?;
            }
        }
        stack.remove(&s);
        done.insert(s);
        Ok(())
    }
    let mut done = BTreeSet::new();
    for &s in bindings.keys() {
        visit(s, u, bindings, &key_of, &mut done, &mut BTreeSet::new())?;
    }
    Ok(())
}

impl PartialEq for PolyExpr {
    fn eq(&self, other: &Self) -> bool {
        Universe::same(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for PolyExpr {}

impl PartialOrd for PolyExpr {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on canonical forms, used to key Lagrangian terms.
impl Ord for PolyExpr {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.terms.iter().rev().map(|(m, c)| (m, &c.re, &c.im));
        let b = other.terms.iter().rev().map(|(m, c)| (m, &c.re, &c.im));
        a.cmp(b)
    }
}

impl std::hash::Hash for PolyExpr {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.re.hash(state);
            c.im.hash(state);
        }
    }
}

fn write_monomial(out: &mut String, m: &Monomial, u: &Universe) {
    let mut first = true;
    for s in u.symbols() {
        let e = m.exponent(s);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(u.name(s));
        match (u.kind(s), e) {
            (SymbolKind::Inverse, _) => out.push_str(&format!("^-{e}")),
            (_, 1) => {}
            (_, _) => out.push_str(&format!("^{e}")),
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = coeff::is_negative_like(c);
            let shown = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&coeff::coeff_text(&shown));
            } else {
                if !shown.is_one() {
                    out.push_str(&coeff::coeff_text(&shown));
                    out.push('*');
                }
                write_monomial(&mut out, m, &self.universe);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyExpr({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&PolyExpr> for &PolyExpr {
            type Output = PolyExpr;
            #[track_caller]
            fn $m(self, rhs: &PolyExpr) -> PolyExpr {
                self.$checked(rhs).expect("polynomials from different universes")
            }
        }
        impl $tr<PolyExpr> for PolyExpr {
            type Output = PolyExpr;
            #[track_caller]
            fn $m(self, rhs: PolyExpr) -> PolyExpr {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PolyExpr> for PolyExpr {
            type Output = PolyExpr;
            #[track_caller]
            fn $m(self, rhs: &PolyExpr) -> PolyExpr {
                (&self).$m(rhs)
            }
        }
        impl $tr<PolyExpr> for &PolyExpr {
            type Output = PolyExpr;
            #[track_caller]
            fn $m(self, rhs: PolyExpr) -> PolyExpr {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &PolyExpr {
    type Output = PolyExpr;
    fn neg(self) -> PolyExpr {
        PolyExpr {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for PolyExpr {
    type Output = PolyExpr;
    fn neg(self) -> PolyExpr {
        -&self
    }
}
