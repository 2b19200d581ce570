//! Small numeric helpers shared by the estimators.

/// Mean, sample standard deviation and per-repetition values of a
/// repeated estimate. With a single repetition the standard deviation is
/// undefined and reported as 0 with `std_dev_defined` cleared.
#[derive(Debug, Clone, PartialEq)]
pub struct RepeatedEstimate {
    pub mean: f64,
    pub std_dev: f64,
    pub std_dev_defined: bool,
    pub per_rep: Vec<f64>,
}

impl RepeatedEstimate {
    pub fn from_values(per_rep: Vec<f64>) -> Self {
        let n = per_rep.len();
        // When every repetition agrees the mean is that value exactly;
        // sum-then-divide would round it.
        let mean = if per_rep.iter().all(|v| *v == per_rep[0]) {
            per_rep[0]
        } else {
            per_rep.iter().sum::<f64>() / n as f64
        };
        let (std_dev, std_dev_defined) = if n > 1 {
            let var =
                per_rep.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
            (var.sqrt(), true)
        } else {
            (0.0, false)
        };
        RepeatedEstimate {
            mean,
            std_dev,
            std_dev_defined,
            per_rep,
        }
    }
}

/// Compensated (Kahan) summation; keeps the error of long probability
/// sums near one ulp instead of growing with the term count.
pub fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}
