// Families where Z_R(H_{(n-1)/n}) exceeds Z_C(p), one where the shifted
// inequality fails, and the four-zero window for x^n + a x^(n-2).

use hawaii::error::Result;
use hawaii::families::{
    family_binomial_sym, family_monomial_gap, family_shapiro1_deg4, family_shapiro2, FamilyInstance,
};
use hawaii::poly::{int, rat};

fn show(inst: &FamilyInstance) {
    let params: Vec<String> = inst.params.iter().map(|p| format!("{}={}", p.name, p.value)).collect();
    println!("{} [{}]  p = {}", inst.name, params.join(", "), inst.p);
    for c in &inst.claims {
        println!("  {:?}  {}  (observed {})", c.status, c.label, c.observed);
    }
}

pub fn run_example() -> Result<()> {
    let quartic = family_shapiro1_deg4(&int(2))?;
    show(&quartic);
    assert!(quartic.all_hold());

    for n in 5..=7 {
        let inst = family_binomial_sym(n)?;
        assert!(inst.all_hold());
        show(&inst);
    }

    show(&family_shapiro2(3)?);
    let gap = family_monomial_gap(4, &rat(1, 1))?;
    show(&gap);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
