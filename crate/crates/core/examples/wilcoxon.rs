//! Rank-sum test on two samples of final values. Small tie-free samples use
//! the exact distribution, larger or tied ones the normal approximation.

use windplan::stats::{summarize, wilcoxon_rank_sum, ALPHA};

fn main() -> windplan::Result<()> {
    let a = [0.012, 0.008, 0.015, 0.009, 0.011, 0.010];
    let b = [0.031, 0.019, 0.027, 0.022, 0.040, 0.025];
    let r = wilcoxon_rank_sum(&a, &b, ALPHA)?;
    println!(
        "a vs b: U = {}, p = {:.5} ({:?}), mark {}",
        r.u_statistic, r.p_value, r.method, r.mark
    );

    let c: Vec<f64> = (0..30).map(|i| (i as f64 * 0.37).sin().abs()).collect();
    let d: Vec<f64> = c.iter().map(|v| v + 0.02).collect();
    let r = wilcoxon_rank_sum(&c, &d, ALPHA)?;
    println!(
        "c vs d: U = {}, p = {:.5} ({:?}), mark {}",
        r.u_statistic, r.p_value, r.method, r.mark
    );

    let s = summarize(&c)?;
    println!(
        "c: best {:.4}, mean {:.4}, std {:.4} over {} runs",
        s.best, s.mean, s.std, s.n_runs
    );
    Ok(())
}
