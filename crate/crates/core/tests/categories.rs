use easycat::geometry::flip_strands;
use easycat::{close, ClassName, ClosureBudget, Geometry, Membership, PartitionDiagram, RelationSpec};

fn budget(p: usize) -> ClosureBudget {
    ClosureBudget::points(p)
}

#[test]
fn color_blind_table_matches_colored_comparison() {
    for g in [Geometry::ON, Geometry::ONStar, Geometry::ONPlus] {
        let c = g.spec().close(budget(6)).unwrap();
        assert!(c.is_color_blind(), "{g}");
        let class = g.spec().class_predicate.unwrap();
        let fast = c.compare_with_class(class, 6).unwrap();
        let slow = c.compare_with_class_colored(class, 6).unwrap();
        assert!(fast.equal() && slow.equal(), "{g}");
        assert_eq!(fast.closure_size, slow.closure_size);
    }
}

#[test]
fn star_geometries_form_a_strict_chain() {
    let starstar = Geometry::UNStarStar.spec().close(budget(8)).unwrap();
    let star = Geometry::UNStar.spec().close(budget(8)).unwrap();
    let times = Geometry::UNTimes.spec().close(budget(8)).unwrap();

    assert!(star.difference_up_to(&starstar, 8, 1).is_empty());
    assert!(times.difference_up_to(&star, 8, 1).is_empty());
    assert!(!starstar.difference_up_to(&star, 8, 1).is_empty());
    assert!(!star.difference_up_to(&times, 8, 1).is_empty());

    let x3: PartitionDiagram = "www|www;u1-l3,u2-l2,u3-l1".parse().unwrap();
    assert_eq!(star.contains(&x3).unwrap(), Membership::NotFoundWithinBudget);
    assert_eq!(starstar.contains(&x3).unwrap(), Membership::In);
}

#[test]
fn single_colored_crossing_generates_all_colorings() {
    let x3 = RelationSpec::reversal("www").unwrap().to_diagram();
    let c = close(&[x3], budget(8), true).unwrap();
    assert!(c.compare_with_class(ClassName::CalP2StarStar, 8).unwrap().equal());
}

#[test]
fn basic_crossing_gives_all_pairings() {
    let mut gens = flip_strands();
    gens.push("ww|ww;u1-l2,u2-l1".parse().unwrap());
    let c = close(&gens, budget(8), true).unwrap();
    assert!(c.compare_with_class(ClassName::P2, 8).unwrap().equal());
    assert!(!c.compare_with_class(ClassName::P2Star, 8).unwrap().equal());
}
