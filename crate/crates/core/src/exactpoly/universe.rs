use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// Spacetime coordinates, always present in every universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    T,
    X,
    Y,
    Z,
}

impl Coord {
    pub const ALL: [Coord; 4] = [Coord::T, Coord::X, Coord::Y, Coord::Z];

    /// Coordinate for spacetime index `mu` (0 = time).
    pub fn from_index(mu: usize) -> Option<Coord> {
        Self::ALL.get(mu).copied()
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Coord::T => "t",
            Coord::X => "x",
            Coord::Y => "y",
            Coord::Z => "z",
        }
    }
}

/// Handle to a symbol slot of a [`Universe`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) usize);

impl Symbol {
    pub fn slot(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolKind {
    Constant,
    /// The formal reciprocal of another constant; `q * q^-1` cancels.
    Inverse,
    Coordinate(Coord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct SymbolInfo {
    name: String,
    kind: SymbolKind,
    partner: Option<usize>,
}

/// The ordered set of symbols a polynomial may mention.
///
/// Constants come first in declaration order (an invertible constant is
/// immediately followed by its reciprocal), then the coordinates t, x, y, z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    symbols: Vec<SymbolInfo>,
    by_name: HashMap<String, usize>,
}

#[derive(Debug, Default)]
pub struct UniverseBuilder {
    constants: Vec<(String, bool)>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    name != "i"
        && !matches!(name, "t" | "x" | "y" | "z")
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl UniverseBuilder {
    pub fn constant(mut self, name: &str) -> Self {
        self.constants.push((name.to_string(), false));
        self
    }

    /// Declares a nonzero constant together with its formal reciprocal.
    pub fn invertible(mut self, name: &str) -> Self {
        self.constants.push((name.to_string(), true));
        self
    }

    pub fn build(self) -> Result<Arc<Universe>, PolyError> {
        let mut symbols = Vec::new();
        let mut by_name = HashMap::new();
        for (name, inv) in self.constants {
            if !valid_name(&name) || by_name.contains_key(&name) {
                return Err(PolyError::BadSymbolName(name));
            }
            let idx = symbols.len();
            by_name.insert(name.clone(), idx);
            symbols.push(SymbolInfo {
                name: name.clone(),
                kind: SymbolKind::Constant,
                partner: inv.then_some(idx + 1),
            });
            if inv {
                symbols.push(SymbolInfo {
                    name,
                    kind: SymbolKind::Inverse,
                    partner: Some(idx),
                });
            }
        }
        for c in Coord::ALL {
            by_name.insert(c.name().to_string(), symbols.len());
            symbols.push(SymbolInfo {
                name: c.name().to_string(),
                kind: SymbolKind::Coordinate(c),
                partner: None,
            });
        }
        Ok(Arc::new(Universe { symbols, by_name }))
    }
}

impl Universe {
    pub fn builder() -> UniverseBuilder {
        UniverseBuilder::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Looks up a constant or coordinate by name.
    pub fn symbol(&self, name: &str) -> Result<Symbol, PolyError> {
        self.by_name
            .get(name)
            .map(|&i| Symbol(i))
            .ok_or_else(|| PolyError::UnknownSymbol(name.to_string()))
    }

    pub fn coord(&self, c: Coord) -> Symbol {
        Symbol(self.symbols.len() - 4 + c.index())
    }

    pub fn kind(&self, s: Symbol) -> SymbolKind {
        self.symbols[s.0].kind
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s.0].name
    }

    /// The reciprocal slot of an invertible constant, or the constant of an inverse slot.
    pub fn partner(&self, s: Symbol) -> Option<Symbol> {
        self.symbols[s.0].partner.map(Symbol)
    }

    pub fn inverse(&self, s: Symbol) -> Result<Symbol, PolyError> {
        match self.kind(s) {
            SymbolKind::Constant => self
                .partner(s)
                .ok_or_else(|| PolyError::NotInvertible(self.name(s).to_string())),
            SymbolKind::Inverse => Ok(self.partner(s).expect("inverse slot has partner")),
            SymbolKind::Coordinate(_) => Err(PolyError::NotInvertible(self.name(s).to_string())),
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.symbols.len()).map(Symbol)
    }

    pub(crate) fn same(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .symbols()
            .map(|s| match self.kind(s) {
                SymbolKind::Inverse => format!("{}^-1", self.name(s)),
                _ => self.name(s).to_string(),
            })
            .collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}
