//! The width table for Frobenius groups F_q, built at the raised order cap.
//!
//!     cargo run --release --example frobenius_table

use translat::cli::frobenius_table;
use translat::group::RAISED_ORDER_CAP;

fn main() -> translat::Result<()> {
    for row in frobenius_table(RAISED_ORDER_CAP)? {
        let w = row.width.map_or("-".into(), |w| w.to_string());
        println!("F_{:<3} {:>4} = {:<14} width {w}", row.q, row.order, row.factorization);
    }
    Ok(())
}
