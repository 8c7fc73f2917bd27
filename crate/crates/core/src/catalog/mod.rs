//! Irreducible moduli for `2 <= n <= 512`: per degree, the least (by value)
//! irreducible polynomial overall, the least irreducible trinomial and the
//! least irreducible equally spaced polynomial with at least four terms,
//! where they exist. The table is embedded; a test re-derives it by search.

mod table;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bits::BitVec;
use crate::gf2::{is_irreducible, BinaryPolynomial};
use crate::synth::{classify_family, Family};

pub const MIN_N: usize = 2;
pub const MAX_N: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Generic,
    Trinomial,
    EquallySpaced,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::Generic,
        FamilyKind::Trinomial,
        FamilyKind::EquallySpaced,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Generic => "generic",
            FamilyKind::Trinomial => "trinomial",
            FamilyKind::EquallySpaced => "equally-spaced",
        }
    }

    fn admits(&self, f: Family) -> bool {
        match self {
            FamilyKind::Generic => true,
            FamilyKind::Trinomial => matches!(f, Family::Trinomial { .. }),
            FamilyKind::EquallySpaced => {
                matches!(f, Family::EquallySpaced { terms, .. } if terms >= 3)
            }
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown family `{s}` (generic, trinomial, equally-spaced)"))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("degree {0} outside {MIN_N}..={MAX_N}")]
    OutOfRange(usize),
    #[error("no irreducible {family} polynomial of degree {n}")]
    NotFound { n: usize, family: FamilyKind },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub n: usize,
    pub polynomial: BinaryPolynomial,
    pub family: Family,
    /// A fixed example modulus rather than a search result.
    pub pinned: bool,
}

impl CatalogEntry {
    fn new(exps: &[usize], pinned: bool) -> Self {
        let polynomial = BinaryPolynomial::from_exponents(exps);
        CatalogEntry {
            n: exps[0],
            family: classify_family(&polynomial),
            polynomial,
            pinned,
        }
    }

    /// Family tag: `generic`, `trinomial(k)` or `equally_spaced(n,s)`.
    pub fn family_tag(&self) -> String {
        match self.family {
            Family::Generic => "generic".into(),
            Family::Trinomial { k } => format!("trinomial({k})"),
            Family::EquallySpaced { spacing, .. } => {
                format!("equally_spaced({},{spacing})", self.n)
            }
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.n,
            self.polynomial.to_exponent_list(),
            self.family_tag()
        )?;
        if self.pinned {
            f.write_str(" pinned")?;
        }
        Ok(())
    }
}

/// Example moduli kept in the catalog regardless of the search.
const PINNED: &[&[usize]] = &[&[7, 5, 3, 1, 0]];

/// Structured example moduli whose reduction matrices are shown as worked
/// examples; they are reducible, so they are not catalog entries.
pub const STRUCTURAL_EXAMPLES: &[&[usize]] = &[&[9, 7, 0], &[8, 6, 4, 2, 0]];

/// All entries of degree `n` (searched entries first, by value).
pub fn entries(n: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    if !(MIN_N..=MAX_N).contains(&n) {
        return Err(CatalogError::OutOfRange(n));
    }
    let mut out: Vec<CatalogEntry> = table::TABLE
        .iter()
        .filter(|e| e[0] == n)
        .map(|e| CatalogEntry::new(e, false))
        .collect();
    out.extend(
        PINNED
            .iter()
            .filter(|e| e[0] == n)
            .map(|e| CatalogEntry::new(e, true)),
    );
    Ok(out)
}

/// Every entry in the catalog, by degree.
pub fn all_entries() -> Vec<CatalogEntry> {
    (MIN_N..=MAX_N)
        .flat_map(|n| entries(n).expect("in range"))
        .collect()
}

/// The least irreducible polynomial of degree `n` in the requested family.
pub fn catalog_lookup(n: usize, family: FamilyKind) -> Result<CatalogEntry, CatalogError> {
    entries(n)?
        .into_iter()
        .filter(|e| !e.pinned && family.admits(e.family))
        .min_by(|x, y| value_cmp(&x.polynomial, &y.polynomial))
        .ok_or(CatalogError::NotFound { n, family })
}

fn value_cmp(x: &BinaryPolynomial, y: &BinaryPolynomial) -> std::cmp::Ordering {
    // descending exponent lists compare like the binary values
    x.exponents().cmp(&y.exponents())
}

/// Searches for the least irreducible polynomial of degree `n` in `family`.
pub fn search(n: usize, family: FamilyKind) -> Option<BinaryPolynomial> {
    match family {
        FamilyKind::Generic => {
            // x^n + 1 + (low bits counted upward)
            let mut bits = vec![false; n + 1];
            bits[0] = true;
            bits[n] = true;
            loop {
                let p = BinaryPolynomial::from_bits(&BitVec::from_bools(&bits));
                if is_irreducible(&p) {
                    return Some(p);
                }
                let mut i = 1;
                while i < n && bits[i] {
                    bits[i] = false;
                    i += 1;
                }
                if i == n {
                    return None;
                }
                bits[i] = true;
            }
        }
        FamilyKind::Trinomial => (1..n)
            .map(|k| BinaryPolynomial::from_exponents(&[n, k, 0]))
            .find(is_irreducible),
        FamilyKind::EquallySpaced => (1..=n / 3)
            .filter(|s| n % s == 0)
            .map(|s| {
                BinaryPolynomial::from_exponents(&(0..=n / s).map(|i| i * s).collect::<Vec<_>>())
            })
            .find(is_irreducible),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn searched(n: usize) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = FamilyKind::ALL
            .iter()
            .filter_map(|&f| search(n, f))
            .map(|p| p.exponents())
            .collect();
        v.sort_by(|a, b| b.cmp(a).reverse());
        v.dedup();
        v
    }

    /// Re-derives the embedded table; `GF2KQ_WRITE_CATALOG=<path>` writes a
    /// fresh one.
    #[test]
    fn table_matches_search() {
        use rayon::prelude::*;
        let rows: Vec<Vec<Vec<usize>>> = (MIN_N..=MAX_N).into_par_iter().map(searched).collect();
        if let Ok(path) = std::env::var("GF2KQ_WRITE_CATALOG") {
            let mut src = String::from("// generated by catalog::tests::table_matches_search\n\npub(super) static TABLE: &[&[usize]] = &[\n");
            for e in rows.iter().flatten() {
                src += &format!("    &{e:?},\n");
            }
            src += "];\n";
            std::fs::write(path, src).unwrap();
        }
        let embedded: Vec<Vec<usize>> = table::TABLE.iter().map(|e| e.to_vec()).collect();
        let derived: Vec<Vec<usize>> = rows.into_iter().flatten().collect();
        assert_eq!(embedded, derived);
    }

    #[test]
    fn entries_are_irreducible_and_tagged() {
        for e in all_entries() {
            assert!(is_irreducible(&e.polynomial), "{e}");
            assert_eq!(e.family, classify_family(&e.polynomial));
            assert_eq!(e.polynomial.degree(), Some(e.n));
        }
    }

    #[test]
    fn lookups() {
        let p = |s: &str| s.parse::<BinaryPolynomial>().unwrap();
        assert_eq!(
            catalog_lookup(7, FamilyKind::Generic).unwrap().polynomial,
            p("x^7+x+1")
        );
        assert!(entries(7)
            .unwrap()
            .iter()
            .any(|e| e.pinned && e.polynomial == p("x^7+x^5+x^3+x+1")));
        assert_eq!(
            catalog_lookup(8, FamilyKind::Generic).unwrap().polynomial,
            p("x^8+x^4+x^3+x+1")
        );
        assert_eq!(
            catalog_lookup(4, FamilyKind::EquallySpaced)
                .unwrap()
                .polynomial,
            p("x^4+x^3+x^2+x+1")
        );
        assert_eq!(
            catalog_lookup(9, FamilyKind::Trinomial).unwrap().polynomial,
            p("x^9+x+1")
        );
        // Swan: no irreducible trinomial of degree 8
        assert_eq!(
            catalog_lookup(8, FamilyKind::Trinomial),
            Err(CatalogError::NotFound {
                n: 8,
                family: FamilyKind::Trinomial
            })
        );
        assert!(catalog_lookup(1, FamilyKind::Generic).is_err());
        assert!(catalog_lookup(513, FamilyKind::Generic).is_err());
        for ex in STRUCTURAL_EXAMPLES {
            assert!(!is_irreducible(&BinaryPolynomial::from_exponents(ex)));
        }
    }
}
