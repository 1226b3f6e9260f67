//! Lower/upper/exact bounds on h(n, k), with search values for small n.

use dmpsat::bounds::bound_table;
use dmpsat::search::h_search;

fn main() -> dmpsat::Result<()> {
    let mut table = bound_table(3..=12, 3..=6)?;
    for row in table.rows.iter_mut().filter(|r| r.n <= 8) {
        row.computed = h_search(row.n, row.k)?.h_value;
    }
    print!("{}", table.to_tsv());
    Ok(())
}
