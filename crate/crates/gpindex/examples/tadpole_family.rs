//! Tadpole graphs T(l, t): odd cycle plus an even path, with a closed-form GP.
//!
//! Run with: cargo run --example tadpole_family

use gpindex::families::{self, TadpoleSpec};
use gpindex::gp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>3} {:>10} {:>10}", "l", "t", "GP", "integer");
    for l in [3usize, 5, 7, 9, 11, 13, 15] {
        for t in [2usize, 4] {
            let spec = TadpoleSpec::new(l, t)?;
            let g = families::tadpole(spec)?;
            let closed = families::tadpole_gp_closed_form(spec)?;
            let computed = gp::gp_orbit_representative(&g)?;
            assert_eq!(closed, computed);
            // non-integrality depends only on l mod 8
            assert_eq!(!computed.is_integer(), families::tadpole_is_noninteger(l)?);
            println!(
                "{:>3} {:>3} {:>10} {:>10}",
                l,
                t,
                computed.to_string(),
                computed.is_integer()
            );
        }
    }
    Ok(())
}
