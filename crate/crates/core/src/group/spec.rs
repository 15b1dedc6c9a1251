//! Group family specifications (`C:12`, `D:9`, `Q:8`, `Dic:3`, `F:5`, `A:4`,
//! `perm:<path>`) and their deterministic construction.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::field::{is_prime, GaloisField};
use super::perm::{parse_perm_file, Permutation};
use super::FiniteGroup;
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 200;
/// Cap that admits the larger Frobenius groups (F_16, F_17, F_19).
pub const RAISED_ORDER_CAP: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// `D_n`, order `2n`.
    Dihedral(usize),
    /// `Q_m` by order `m = 2^k ≥ 8`.
    Quaternion(usize),
    /// `Dic_n`, order `4n`.
    Dicyclic(usize),
    /// `F_q = 𝔽_q ⋊ 𝔽_q^×`, order `q(q-1)`.
    Frobenius(usize),
    Alternating(usize),
    PermGens(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub order_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl BuildOptions {
    pub fn with_cap(order_cap: usize) -> Self {
        BuildOptions { order_cap }
    }
}

impl GroupSpec {
    /// Order implied by the family parameters, when known without building.
    pub fn expected_order(&self) -> Option<usize> {
        match *self {
            GroupSpec::Cyclic(n) => Some(n),
            GroupSpec::Dihedral(n) => Some(2 * n),
            GroupSpec::Quaternion(m) => Some(m),
            GroupSpec::Dicyclic(n) => Some(4 * n),
            GroupSpec::Frobenius(q) => Some(q * (q - 1)),
            GroupSpec::Alternating(n) => Some((3..=n).product::<usize>()),
            GroupSpec::PermGens(_) => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C_{n}"),
            GroupSpec::Dihedral(n) => format!("D_{n}"),
            GroupSpec::Quaternion(m) => format!("Q_{m}"),
            GroupSpec::Dicyclic(n) => format!("Dic_{n}"),
            GroupSpec::Frobenius(q) => format!("F_{q}"),
            GroupSpec::Alternating(n) => format!("A_{n}"),
            GroupSpec::PermGens(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "G".into()),
        }
    }

    fn check_params(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::UnsupportedSpec(format!("{self}: {why}")));
        match *self {
            GroupSpec::Cyclic(n) if n < 1 => bad("n must be at least 1"),
            GroupSpec::Dihedral(n) if n < 2 => bad("n must be at least 2"),
            GroupSpec::Dicyclic(n) if n < 2 => bad("n must be at least 2"),
            GroupSpec::Quaternion(m) if m < 8 || !m.is_power_of_two() => bad("order must be a power of two, at least 8"),
            GroupSpec::Frobenius(q) if !(is_prime(q) && q >= 3) && ![4, 8, 9, 16].contains(&q) => {
                bad("q must be an odd prime or one of 4, 8, 9, 16")
            }
            GroupSpec::Alternating(n) if n < 3 => bad("n must be at least 3"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Quaternion(m) => write!(f, "Q:{m}"),
            GroupSpec::Dicyclic(n) => write!(f, "Dic:{n}"),
            GroupSpec::Frobenius(q) => write!(f, "F:{q}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::PermGens(p) => write!(f, "perm:{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::UnsupportedSpec(format!("{s:?}: expected <family>:<parameter>")))?;
        if tag == "perm" {
            return Ok(GroupSpec::PermGens(PathBuf::from(arg)));
        }
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::UnsupportedSpec(format!("{s:?}: parameter is not a number")))?;
        let spec = match tag {
            "C" => GroupSpec::Cyclic(n),
            "D" => GroupSpec::Dihedral(n),
            "Q" => GroupSpec::Quaternion(n),
            "Dic" => GroupSpec::Dicyclic(n),
            "F" => GroupSpec::Frobenius(n),
            "A" => GroupSpec::Alternating(n),
            _ => return Err(Error::UnsupportedSpec(format!("{s:?}: unknown family {tag:?}"))),
        };
        spec.check_params()?;
        Ok(spec)
    }
}

/// Builds and validates the group for `spec`. Same spec, same table.
pub fn build_group(spec: &GroupSpec, opts: &BuildOptions) -> Result<FiniteGroup> {
    spec.check_params()?;
    if let Some(order) = spec.expected_order() {
        if order > opts.order_cap {
            return Err(Error::OrderCap {
                order,
                cap: opts.order_cap,
            });
        }
    }
    let cap = opts.order_cap;
    let label = spec.label();
    match *spec {
        GroupSpec::Cyclic(n) => FiniteGroup::from_generators(label, 0usize, &[1 % n], |a, b| (a + b) % n, cap),
        GroupSpec::Dihedral(n) => {
            // (i, j) = r^i s^j, with s r s = r^-1
            let op = move |a: &(usize, usize), b: &(usize, usize)| {
                let i = if a.1 == 0 { a.0 + b.0 } else { a.0 + n - b.0 } % n;
                (i, (a.1 + b.1) % 2)
            };
            FiniteGroup::from_generators(label, (0, 0), &[(1 % n, 0), (0, 1)], op, cap)
        }
        GroupSpec::Dicyclic(n) => dicyclic(label, n, cap),
        GroupSpec::Quaternion(m) => dicyclic(label, m / 4, cap),
        GroupSpec::Frobenius(q) => {
            let field = GaloisField::new(q)?;
            // (a, b) is x ↦ a x + b; product is composition
            let op = |x: &(usize, usize), y: &(usize, usize)| (field.mul(x.0, y.0), field.add(field.mul(x.0, y.1), x.1));
            let gens = [(1, 1), (field.primitive_element(), 0)];
            FiniteGroup::from_generators(label, (1, 0), &gens, op, cap)
        }
        GroupSpec::Alternating(n) => {
            // 3-cycles (1 2 k) generate A_n
            let gens: Vec<Permutation> = (3..=n)
                .map(|k| Permutation::from_cycles(&[vec![1, 2, k]], n))
                .collect::<Result<_>>()?;
            from_permutations(label, &gens, cap)
        }
        GroupSpec::PermGens(ref path) => from_permutations(label, &parse_perm_file(path)?, cap),
    }
}

fn dicyclic(label: String, n: usize, cap: usize) -> Result<FiniteGroup> {
    // (i, j) = a^i x^j with a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1
    let m = 2 * n;
    let op = move |p: &(usize, usize), q: &(usize, usize)| {
        let i = if p.1 == 0 { p.0 + q.0 } else { p.0 + m - q.0 } % m;
        if p.1 == 1 && q.1 == 1 {
            ((i + n) % m, 0)
        } else {
            (i, (p.1 + q.1) % 2)
        }
    };
    FiniteGroup::from_generators(label, (0, 0), &[(1, 0), (0, 1)], op, cap)
}

pub fn from_permutations(label: String, gens: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    let degree = gens.first().map(Permutation::degree).unwrap_or(1);
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::Permutation("generators have different degrees".into()));
    }
    FiniteGroup::from_generators(label, Permutation::identity(degree), gens, |a, b| a.compose(b), cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Result<FiniteGroup> {
        build_group(&s.parse()?, &BuildOptions::default())
    }

    #[test]
    fn orders() {
        for (s, n) in [
            ("C:1", 1),
            ("C:12", 12),
            ("D:9", 18),
            ("D:2", 4),
            ("Q:8", 8),
            ("Q:32", 32),
            ("Dic:9", 36),
            ("F:5", 20),
            ("F:8", 56),
            ("F:9", 72),
            ("A:4", 12),
        ] {
            assert_eq!(build(s).unwrap().order(), n, "{s}");
        }
    }

    #[test]
    fn deterministic() {
        let a = build("Dic:6").unwrap();
        let b = build("Dic:6").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unsupported_parameters() {
        assert!("F:25".parse::<GroupSpec>().is_err());
        assert!("F:6".parse::<GroupSpec>().is_err());
        assert!("Q:12".parse::<GroupSpec>().is_err());
        assert!("D:1".parse::<GroupSpec>().is_err());
        assert!("X:3".parse::<GroupSpec>().is_err());
        assert!("C12".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(build("F:17"), Err(Error::OrderCap { order: 272, cap: 200 })));
        let g = build_group(&GroupSpec::Frobenius(17), &BuildOptions::with_cap(RAISED_ORDER_CAP)).unwrap();
        assert_eq!(g.order(), 272);
    }

    #[test]
    fn quaternion_structure() {
        let g = build("Q:8").unwrap();
        let involutions = (0..8).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn display_round_trip() {
        for s in ["C:7", "D:36", "Q:16", "Dic:18", "F:9", "A:4"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
    }
}
