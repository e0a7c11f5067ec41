//! Exact signatures of symmetric integer matrices by congruence
//! diagonalization, including a form that needs the hyperbolic-pair split.

use ust::SymmetricIntMatrix;

fn show(label: &str, rows: Vec<Vec<i64>>) {
    let m = SymmetricIntMatrix::from_rows(rows).unwrap();
    println!("{label}: signature = {}", m.signature());
}

fn main() {
    show("identity 3x3", vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    show("negative definite tridiagonal", vec![
        vec![-2, 1, 0, 0],
        vec![1, -2, 1, 0],
        vec![0, 1, -2, 1],
        vec![0, 0, 1, -2],
    ]);
    show("hyperbolic plane", vec![vec![0, 1], vec![1, 0]]);
    show("zero diagonal, rank 3", vec![
        vec![0, 2, 1],
        vec![2, 0, 3],
        vec![1, 3, 0],
    ]);

    // signature is additive over block sums and flips under negation
    let a = SymmetricIntMatrix::from_rows(vec![vec![2, 1], vec![1, 2]]).unwrap();
    let b = SymmetricIntMatrix::from_rows(vec![vec![-1]]).unwrap();
    let sum = a.direct_sum(&b);
    println!(
        "block sum: {} + {} = {}",
        a.signature(),
        b.signature(),
        sum.signature()
    );
    println!("negated block sum: {}", sum.negated().signature());
}
