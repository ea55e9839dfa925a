//! Relations of the form `x_{i1}...x_{in} = x_{σ(i1)}...x_{σ(in)}`, their
//! diagrams, and implication checks between them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closure::{ClosureBudget, CategoryClosure, Membership};
use crate::color::ColoredWord;
use crate::diagram::{PartitionDiagram, Point};
use crate::error::{Error, Result};

/// A relation between monomials in the coordinates and their adjoints.
///
/// The left side is `word`; the right side is `rhs`, and the letter at
/// position `t` on the left is identified with position `permutation[t]` on
/// the right. For permutation relations `rhs` is the permuted word; a
/// relation such as `ab* = a*b` keeps the letters in place but changes colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSpec {
    pub word: ColoredWord,
    /// 1-based images, `permutation[t-1] = σ(t)`.
    pub permutation: Vec<usize>,
    pub rhs: ColoredWord,
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p == 0 || p > perm.len() || seen[p - 1] {
            return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
        }
        seen[p - 1] = true;
    }
    Ok(())
}

impl RelationSpec {
    /// The relation moving letter `t` of `word` to position `permutation[t-1]`.
    pub fn permutation(word: ColoredWord, permutation: Vec<usize>) -> Result<Self> {
        if permutation.len() != word.len() {
            return Err(Error::InvalidArgument(
                "permutation length differs from word length".into(),
            ));
        }
        check_permutation(&permutation)?;
        let mut rhs = word.letters().to_vec();
        for (t, &p) in permutation.iter().enumerate() {
            rhs[p - 1] = word.letters()[t];
        }
        Ok(RelationSpec {
            word,
            permutation,
            rhs: ColoredWord::new(rhs),
        })
    }

    /// A relation with an explicitly colored right-hand side.
    pub fn with_rhs(word: ColoredWord, permutation: Vec<usize>, rhs: ColoredWord) -> Result<Self> {
        if permutation.len() != word.len() || rhs.len() != word.len() {
            return Err(Error::InvalidArgument("relation sides have different lengths".into()));
        }
        check_permutation(&permutation)?;
        Ok(RelationSpec {
            word,
            permutation,
            rhs,
        })
    }

    /// `x_1 ... x_n = x_n ... x_1` on the given word.
    pub fn reversal(word: &str) -> Result<Self> {
        let word: ColoredWord = word.parse()?;
        let n = word.len();
        Self::permutation(word, (1..=n).rev().collect())
    }

    /// `ab* = a*b`.
    pub fn half_flip() -> Self {
        Self::with_rhs(
            "wb".parse().expect("literal"),
            vec![1, 2],
            "bw".parse().expect("literal"),
        )
        .expect("valid relation")
    }

    /// All eight colorings of `abc = cba`.
    pub fn all_colored_reversals() -> Vec<Self> {
        ColoredWord::all_of_length(3)
            .into_iter()
            .map(|w| Self::permutation(w, vec![3, 2, 1]).expect("valid"))
            .collect()
    }

    pub fn to_diagram(&self) -> PartitionDiagram {
        relation_to_diagram(self)
    }
}

impl fmt::Display for RelationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.permutation.iter().map(usize::to_string).collect();
        write!(f, "{} -> {} [{}]", self.word, self.rhs, perm.join(","))
    }
}

/// Diagram with upper row `word`, lower row `rhs` and strings `u_t - l_{σ(t)}`.
pub fn relation_to_diagram(r: &RelationSpec) -> PartitionDiagram {
    let blocks: Vec<Vec<Point>> = r
        .permutation
        .iter()
        .enumerate()
        .map(|(t, &p)| vec![Point::Upper(t + 1), Point::Lower(p)])
        .collect();
    PartitionDiagram::new(r.word.clone(), r.rhs.clone(), &blocks).expect("relation diagrams are well formed")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Implication {
    Implied,
    NotFoundWithinBudget,
}

/// Decides whether the conclusion's diagram lies in the closure generated by the hypotheses.
pub fn implication_check(
    hypotheses: &[RelationSpec],
    conclusion: &RelationSpec,
    budget: ClosureBudget,
) -> Result<Implication> {
    let gens: Vec<PartitionDiagram> = hypotheses.iter().map(relation_to_diagram).collect();
    let closure = CategoryClosure::close(&gens, budget, true)?;
    Ok(match closure.contains(&relation_to_diagram(conclusion))? {
        Membership::In => Implication::Implied,
        Membership::NotFoundWithinBudget => Implication::NotFoundWithinBudget,
    })
}
