//! Round-trips a parity-check matrix through both supported text formats —
//! a dense 0/1 grid and the sparse alist layout — and checks that a code
//! built from either file is the same object.

use std::fs;

use coset_nmc::formats::{parse_alist, parse_dense, to_alist_string, to_dense_string};
use coset_nmc::{profile, Cap, LinearCode, Result};

const DENSE: &str = "3 7\n1010101\n0110011\n0001111\n";

fn main() -> Result<()> {
    let h = parse_dense(DENSE)?;
    println!("dense text:\n{}", to_dense_string(&h));

    let alist = to_alist_string(&h);
    println!("same matrix as alist:\n{alist}");
    assert_eq!(parse_alist(&alist)?, h);

    let dir = std::env::temp_dir();
    let dense_path = dir.join("coset-nmc-example.txt");
    let alist_path = dir.join("coset-nmc-example.alist");
    fs::write(&dense_path, DENSE)?;
    fs::write(&alist_path, &alist)?;

    let from_dense = LinearCode::from_dense_file(&dense_path)?;
    let from_alist = LinearCode::from_alist_file(&alist_path)?;
    assert_eq!(from_dense.parity_check(), from_alist.parity_check());

    let p = profile(&from_dense, Cap::default())?;
    println!(
        "loaded [n={}, k={}] code with d={} and d_dual={}",
        p.n, p.k, p.d, p.d_dual
    );

    fs::remove_file(dense_path)?;
    fs::remove_file(alist_path)?;
    Ok(())
}
