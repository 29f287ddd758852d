use dihedral_core::klein::*;
fn main() {
    let grid = grid_full();
    println!("grid size: {}", grid.len());
    let t0 = std::time::Instant::now();
    let mut fails = 0;
    for &(k, l, m, n) in &grid {
        match klein_covering(k, l, m, n) {
            Ok(cov) if cov.certified => {}
            Ok(cov) => {
                fails += 1;
                let bad: Vec<_> = cov.checks.iter().filter(|c| !c.advisory && !c.pass).collect();
                println!("NOT CERTIFIED ({k},{l},{m},{n}): {:?}", bad);
            }
            Err(e) => {
                fails += 1;
                println!("ERROR ({k},{l},{m},{n}): {e}");
            }
        }
    }
    println!("done in {:?}, failures: {fails}", t0.elapsed());
}
