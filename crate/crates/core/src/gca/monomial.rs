use std::fmt;

/// A product of generator powers, stored as `(generator index, exponent)`
/// pairs sorted by index with positive exponents. Odd generators never carry
/// an exponent above 1; the product routine enforces this.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Monomial(vec![(i, 1)])
    }

    pub fn power(i: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(i, e)])
        }
    }

    /// Builds a monomial from unsorted pairs, merging repeated indices.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable();
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match out.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => out.push((i, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.iter().find(|&&(j, _)| j == i).map_or(0, |&(_, e)| e)
    }

    /// Number of generator factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// Splits off one power of the lowest-index generator.
    pub fn split_first(&self) -> Option<(usize, Monomial)> {
        let &(i, e) = self.0.first()?;
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(0);
        } else {
            rest[0].1 -= 1;
        }
        Some((i, Monomial(rest)))
    }

    pub fn shift(&self, offset: usize) -> Monomial {
        Monomial(self.0.iter().map(|&(i, e)| (i + offset, e)).collect())
    }

    pub fn remap(&self, map: &[usize]) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(i, e)| (map[i], e)))
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(i, _)| i)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, e)| if e == 1 { format!("g{i}") } else { format!("g{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
