//! Finite groups given by multiplication tables.

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// `table[a][b]` is the index of `a * b`.
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates a multiplication table given by labels.
    pub fn from_table(labels: Vec<String>, table: &[Vec<String>]) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::InvalidGroup("empty group".into()));
        }
        let index = |s: &str| labels.iter().position(|l| l == s);
        if table.len() != n {
            return Err(AlgebraError::InvalidGroup(format!(
                "table has {} rows, expected {}",
                table.len(),
                n
            )));
        }
        let mut idx = vec![vec![0usize; n]; n];
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::InvalidGroup(format!("row {} has {} entries", labels[a], row.len())));
            }
            for (b, entry) in row.iter().enumerate() {
                idx[a][b] = index(entry)
                    .ok_or_else(|| AlgebraError::InvalidGroup(format!("unknown element '{}'", entry)))?;
            }
        }
        Self::from_indices(labels, idx)
    }

    pub fn from_indices(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = labels.len();
        for (a, row) in table.iter().enumerate() {
            let mut seen = vec![false; n];
            for &c in row {
                if seen[c] {
                    return Err(AlgebraError::InvalidGroup(format!(
                        "row '{}' repeats element '{}' (not a Latin square)",
                        labels[a], labels[c]
                    )));
                }
                seen[c] = true;
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[b]] {
                    return Err(AlgebraError::InvalidGroup(format!(
                        "column '{}' repeats element '{}' (not a Latin square)",
                        labels[b], labels[row[b]]
                    )));
                }
                seen[row[b]] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| AlgebraError::NotUnital("no identity element in group table".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(AlgebraError::NotAssociative(format!(
                            "({} {}) {} != {} ({} {})",
                            labels[a], labels[b], labels[c], labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity })
    }

    /// Cyclic group `C_m` with elements `g^0 .. g^{m-1}` labelled by `prefix`.
    pub fn cyclic(m: usize, generator: &str) -> Self {
        let labels = (0..m).map(|k| power_label(generator, k)).collect();
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Self::from_indices(labels, table).expect("cyclic group table")
    }

    /// Dihedral group of order `2u`, elements `g^j h^l`, with `h g = g^{-1} h`.
    pub fn dihedral(u: usize) -> Self {
        assert!(u >= 1);
        let enc = |j: usize, l: usize| l * u + j;
        let mut labels = vec![String::new(); 2 * u];
        for l in 0..2 {
            for j in 0..u {
                let mut s = power_label("g", j);
                if l == 1 {
                    s = if j == 0 { "h".to_string() } else { format!("{}h", s) };
                }
                labels[enc(j, l)] = s;
            }
        }
        let mut table = vec![vec![0; 2 * u]; 2 * u];
        for l1 in 0..2 {
            for j1 in 0..u {
                for l2 in 0..2 {
                    for j2 in 0..u {
                        // g^j1 h^l1 g^j2 h^l2 = g^{j1 + (-1)^l1 j2} h^{l1 + l2}
                        let j = if l1 == 0 { (j1 + j2) % u } else { (j1 + u - j2 % u) % u };
                        table[enc(j1, l1)][enc(j2, l2)] = enc(j, (l1 + l2) % 2);
                    }
                }
            }
        }
        Self::from_indices(labels, table).expect("dihedral group table")
    }

    /// Direct product; element `(a, b)` has index `a * |H| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        let n = self.order() * m;
        let mut labels = Vec::with_capacity(n);
        for a in &self.labels {
            for b in &other.labels {
                let la = if self.labels[self.identity] == *a { None } else { Some(a.as_str()) };
                let lb = if other.labels[other.identity] == *b { None } else { Some(b.as_str()) };
                labels.push(match (la, lb) {
                    (None, None) => "e".to_string(),
                    (Some(x), None) => x.to_string(),
                    (None, Some(y)) => y.to_string(),
                    (Some(x), Some(y)) => format!("{}{}", x, y),
                });
            }
        }
        let mut table = vec![vec![0; n]; n];
        for a1 in 0..self.order() {
            for b1 in 0..m {
                for a2 in 0..self.order() {
                    for b2 in 0..m {
                        table[a1 * m + b1][a2 * m + b2] = self.table[a1][a2] * m + other.table[b1][b2];
                    }
                }
            }
        }
        FiniteGroup::from_indices(labels, table).expect("product table")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a))
    }

    /// Cyclic subgroup generated by `a`, in order `e, a, a^2, ...`.
    pub fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut cur = a;
        while cur != self.identity {
            out.push(cur);
            cur = self.mul(cur, a);
        }
        out
    }

    /// Quotient by the cyclic subgroup generated by a central element.
    /// Returns the quotient group and the coset index of each element.
    pub fn quotient_by_central(&self, a: usize) -> Result<(FiniteGroup, Vec<usize>), AlgebraError> {
        if !self.is_central(a) {
            return Err(AlgebraError::InvalidGroup(format!(
                "'{}' is not central; quotient not normal",
                self.labels[a]
            )));
        }
        let sub = self.cyclic_subgroup(a);
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for &s in &sub {
                coset_of[self.mul(g, s)] = c;
            }
        }
        let labels: Vec<String> = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let table = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| coset_of[self.mul(x, y)]).collect())
            .collect();
        Ok((FiniteGroup::from_indices(labels, table)?, coset_of))
    }
}

fn power_label(g: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => g.to_string(),
        _ => format!("{}^{}", g, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let d = FiniteGroup::dihedral(3);
        assert_eq!(d.order(), 6);
        let g = d.index_of("g").unwrap();
        let h = d.index_of("h").unwrap();
        let g2 = d.index_of("g^2").unwrap();
        assert_eq!(d.mul(h, g), d.mul(g2, h));
        assert_eq!(d.pow(g, 3), d.identity());
        assert_eq!(d.pow(h, 2), d.identity());
    }

    #[test]
    fn repeated_row_is_rejected() {
        let labels = vec!["e".to_string(), "g".to_string()];
        let table = vec![
            vec!["e".to_string(), "g".to_string()],
            vec!["g".to_string(), "g".to_string()],
        ];
        assert!(FiniteGroup::from_table(labels, &table).is_err());
    }

    #[test]
    fn quotient_of_c4_by_square() {
        let c4 = FiniteGroup::cyclic(4, "g");
        let g2 = c4.index_of("g^2").unwrap();
        let (q, coset) = c4.quotient_by_central(g2).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(coset[0], coset[g2]);
    }
}
