//! Registry of the named geometries: their category generators, predicates and samplers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classes::ClassName;
use crate::closure::{CategoryClosure, ClosureBudget};
use crate::color::Color;
use crate::diagram::PartitionDiagram;
use crate::error::{Error, Result};
use crate::linalg::SampleKind;
use crate::relation::RelationSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Geometry {
    #[serde(rename = "O_N")]
    ON,
    #[serde(rename = "O_N*")]
    ONStar,
    #[serde(rename = "O_N+")]
    ONPlus,
    #[serde(rename = "U_N")]
    UN,
    #[serde(rename = "U_N**")]
    UNStarStar,
    #[serde(rename = "U_N+")]
    UNPlus,
    #[serde(rename = "TO_N")]
    TON,
    #[serde(rename = "TO_N*")]
    TONStar,
    #[serde(rename = "TO_N+")]
    TONPlus,
    #[serde(rename = "U_Ntimes")]
    UNTimes,
    #[serde(rename = "U_Nstar")]
    UNStar,
}

impl Geometry {
    pub const ALL: [Geometry; 11] = [
        Geometry::ON,
        Geometry::ONStar,
        Geometry::ONPlus,
        Geometry::UN,
        Geometry::UNStarStar,
        Geometry::UNPlus,
        Geometry::TON,
        Geometry::TONStar,
        Geometry::TONPlus,
        Geometry::UNTimes,
        Geometry::UNStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Geometry::ON => "O_N",
            Geometry::ONStar => "O_N*",
            Geometry::ONPlus => "O_N+",
            Geometry::UN => "U_N",
            Geometry::UNStarStar => "U_N**",
            Geometry::UNPlus => "U_N+",
            Geometry::TON => "TO_N",
            Geometry::TONStar => "TO_N*",
            Geometry::TONPlus => "TO_N+",
            Geometry::UNTimes => "U_Ntimes",
            Geometry::UNStar => "U_Nstar",
        }
    }

    pub fn spec(self) -> GeometrySpec {
        named_geometry(self)
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Geometry {
    type Err = Error;

    /// Accepts the canonical names and spelled-out variants such as `O_Nstar`, `U_Nstarstar`, `TO_Nplus`.
    fn from_str(s: &str) -> Result<Self> {
        let key = s
            .trim()
            .replace(['_', ' ', '-'], "")
            .to_ascii_lowercase()
            .replace("starstar", "**")
            .replace("star", "*")
            .replace("plus", "+")
            .replace("times", "x");
        let g = match key.as_str() {
            "on" => Geometry::ON,
            "on*" => Geometry::ONStar,
            "on+" => Geometry::ONPlus,
            "un" => Geometry::UN,
            "un**" => Geometry::UNStarStar,
            "un+" => Geometry::UNPlus,
            "ton" => Geometry::TON,
            "ton*" => Geometry::TONStar,
            "ton+" => Geometry::TONPlus,
            "unx" | "un×" => Geometry::UNTimes,
            "un*" => Geometry::UNStar,
            _ => return Err(Error::UnknownGeometry(s.to_string())),
        };
        Ok(g)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeometrySpec {
    pub name: Geometry,
    /// Generators beyond the identity strands and the color-matching caps.
    pub category_generators: Vec<PartitionDiagram>,
    pub class_predicate: Option<ClassName>,
    pub sampler_kind: Option<SampleKind>,
}

impl GeometrySpec {
    pub fn close(&self, budget: ClosureBudget) -> Result<CategoryClosure> {
        CategoryClosure::close(&self.category_generators, budget, true)
    }

    /// True when leg colors carry no information (the real geometries).
    pub fn is_real(&self) -> bool {
        matches!(self.name, Geometry::ON | Geometry::ONStar | Geometry::ONPlus)
    }
}

fn parse(s: &str) -> PartitionDiagram {
    s.parse().expect("registry diagrams are well formed")
}

pub fn flip_strands() -> Vec<PartitionDiagram> {
    vec![
        PartitionDiagram::strand(Color::White, Color::Black),
        PartitionDiagram::strand(Color::Black, Color::White),
    ]
}

/// The basic crossing on two white legs.
pub fn basic_crossing() -> PartitionDiagram {
    parse("ww|ww;u1-l2,u2-l1")
}

/// The half-classical crossing on three white legs.
pub fn half_classical_crossing() -> PartitionDiagram {
    parse("www|www;u1-l3,u2-l2,u3-l1")
}

fn unitary_crossings() -> Vec<PartitionDiagram> {
    vec![basic_crossing(), parse("wb|bw;u1-l2,u2-l1")]
}

fn colored_half_crossings() -> Vec<PartitionDiagram> {
    RelationSpec::all_colored_reversals()
        .iter()
        .map(RelationSpec::to_diagram)
        .collect()
}

/// The two generators of the `U_N^*` category.
pub fn star_generators() -> Vec<PartitionDiagram> {
    vec![
        parse("wbbw|bwwb;u1-l3,u2-l4,u3-l1,u4-l2"),
        parse("wbwb|wbwb;u1-l3,u2-l4,u3-l1,u4-l2"),
    ]
}

pub fn named_geometry(name: Geometry) -> GeometrySpec {
    let half_flip = RelationSpec::half_flip().to_diagram();
    let (gens, class, sampler) = match name {
        Geometry::ON => {
            let mut g = flip_strands();
            g.push(basic_crossing());
            (g, Some(ClassName::P2), Some(SampleKind::Orthogonal))
        }
        Geometry::ONStar => {
            let mut g = flip_strands();
            g.push(half_classical_crossing());
            (g, Some(ClassName::P2Star), Some(SampleKind::AntidiagRealPair))
        }
        Geometry::ONPlus => (flip_strands(), Some(ClassName::NC2), None),
        Geometry::UN => (unitary_crossings(), Some(ClassName::CalP2), Some(SampleKind::Unitary)),
        Geometry::UNStarStar => (colored_half_crossings(), Some(ClassName::CalP2StarStar), None),
        Geometry::UNPlus => (Vec::new(), Some(ClassName::CalNC2), None),
        Geometry::TON => {
            let mut g = vec![half_flip];
            g.extend(unitary_crossings());
            (g, Some(ClassName::P2Bar), Some(SampleKind::CircleOrthogonal))
        }
        Geometry::TONStar => {
            let mut g = vec![half_flip];
            g.extend(colored_half_crossings());
            (g, Some(ClassName::P2BarStar), None)
        }
        Geometry::TONPlus => (vec![half_flip], Some(ClassName::NC2Bar), None),
        Geometry::UNTimes => (
            vec![RelationSpec::reversal("wbw").expect("literal").to_diagram()],
            None,
            None,
        ),
        Geometry::UNStar => (star_generators(), None, Some(SampleKind::AntidiagComplexPair)),
    };
    GeometrySpec {
        name,
        category_generators: gens,
        class_predicate: class,
        sampler_kind: sampler,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in Geometry::ALL {
            assert_eq!(g.name().parse::<Geometry>().unwrap(), g);
        }
        assert_eq!("O_Nstar".parse::<Geometry>().unwrap(), Geometry::ONStar);
        assert_eq!("U_Nstarstar".parse::<Geometry>().unwrap(), Geometry::UNStarStar);
        assert_eq!("TO_Nplus".parse::<Geometry>().unwrap(), Geometry::TONPlus);
        assert!(matches!("SU_N".parse::<Geometry>(), Err(Error::UnknownGeometry(_))));
    }

    #[test]
    fn registry_examples() {
        let g = named_geometry(Geometry::ONPlus);
        assert_eq!(g.category_generators, flip_strands());
        assert_eq!(g.class_predicate, Some(ClassName::NC2));
        let g = named_geometry(Geometry::TONPlus);
        assert_eq!(g.category_generators, vec![parse("wb|bw;u1-l1,u2-l2")]);
        assert_eq!(g.class_predicate, Some(ClassName::NC2Bar));
        let g = named_geometry(Geometry::UNStar);
        assert_eq!(g.category_generators, star_generators());
        assert_eq!(g.class_predicate, None);
    }

    #[test]
    fn generators_satisfy_their_predicates() {
        for g in Geometry::ALL {
            let spec = named_geometry(g);
            if let Some(class) = spec.class_predicate {
                for d in &spec.category_generators {
                    assert!(class.contains(d).unwrap(), "{g}: {d}");
                }
            }
        }
    }
}
