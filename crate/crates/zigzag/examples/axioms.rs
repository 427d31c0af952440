//! Check every supported structural property on the eleven-point example
//! semigroup and print a verdict per property, with a witness whenever a
//! check fails.
//!
//! Run with `cargo run --example axioms`.

use zigzag::corpus::i11_subsemigroup;
use zigzag::paths::{check_z1, check_z2, check_z3, z3_merge_classes};

fn main() {
    let s = i11_subsemigroup();
    println!(
        "properties of the eleven-point closure (order {})",
        s.order()
    );

    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };

    println!(
        "  Z1 (unique maximal idempotent above each idempotent): {}",
        verdict(check_z1(&s).unwrap())
    );
    println!("  Z2 (paths generate): {}", verdict(check_z2(&s).unwrap()));

    let z3 = check_z3(&s).unwrap();
    println!("  Z3 (domain paths separate elements): {}", verdict(z3));
    if !z3 {
        println!("     merged classes:");
        for class in z3_merge_classes(&s) {
            let names: Vec<String> = class.iter().map(|&i| s.name(i)).collect();
            println!("       {{{}}}", names.join(", "));
        }
    }

    let p1 = s.ambiguous_pair();
    println!(
        "  P1 (idempotent products stay comparable): {}",
        verdict(p1.is_none())
    );
    if let Some((e, f)) = p1 {
        println!("     ambiguous pair: {} and {}", s.name(e), s.name(f));
    }

    println!(
        "  P4 (each D-class holds a maximal idempotent): {}",
        verdict(s.dclass_maximal_defect().is_none())
    );
    println!("  proper: {}", verdict(s.proper_defect().is_none()));
    println!(
        "  combinatorial (trivial H-classes): {}",
        verdict(s.fat_h_class().is_none())
    );

    let zeu = s.zero_e_unitary_defect().unwrap();
    println!("  0-E-unitary: {}", verdict(zeu.is_none()));
    if let Some((e, t)) = zeu {
        println!(
            "     idempotent {} sits below non-idempotent {}",
            s.name(e),
            s.name(t)
        );
    }
}
