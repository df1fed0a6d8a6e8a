//! Pearson and Spearman coefficients with t-test p-values and tie-aware ranks.

use cescore::eval::{average_ranks, pearson, spearman};

fn main() {
    let metric = [0.61, 0.72, 0.55, 0.80, 0.80, 0.47, 0.66];
    let human = [3.3, 4.0, 3.0, 4.7, 4.3, 2.7, 3.7];
    let p = pearson(&metric, &human).unwrap();
    let s = spearman(&metric, &human).unwrap();
    println!("ranks(metric) = {:?}", average_ranks(&metric));
    println!("pearson  r   = {:.4} (p = {:.4})", p.coefficient, p.p_value);
    println!("spearman rho = {:.4} (p = {:.4})", s.coefficient, s.p_value);
}
