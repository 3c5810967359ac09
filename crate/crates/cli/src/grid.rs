//! Grid strings: `x`, `x1,x2,...`, `lo:hi:step` and `lo:hi:logN`.

/// Points of a grid string.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err("empty grid".into());
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let grid = match parts.as_slice() {
        [single] => single
            .split(',')
            .map(number)
            .collect::<Result<Vec<_>, _>>()?,
        [lo, hi, step] => {
            let (lo, hi) = (number(lo)?, number(hi)?);
            if !(hi >= lo) {
                return Err(format!("grid '{spec}' needs lo <= hi"));
            }
            if let Some(n) = step.strip_prefix("log") {
                let n: usize = n
                    .parse()
                    .map_err(|_| format!("bad point count in '{spec}'"))?;
                if !(lo > 0.0) || n < 2 {
                    return Err(format!(
                        "log grid '{spec}' needs lo > 0 and at least 2 points"
                    ));
                }
                let r = (hi / lo).ln();
                (0..n)
                    .map(|i| {
                        if i + 1 == n {
                            hi
                        } else {
                            lo * (r * i as f64 / (n - 1) as f64).exp()
                        }
                    })
                    .collect()
            } else {
                let step = number(step)?;
                if !(step > 0.0) {
                    return Err(format!("grid '{spec}' needs a positive step"));
                }
                let n = ((hi - lo) / step + 1e-9).floor() as usize;
                (0..=n).map(|i| lo + step * i as f64).collect()
            }
        }
        _ => return Err(format!("cannot parse grid '{spec}'")),
    };
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(format!("grid '{spec}' has non-finite points"));
    }
    Ok(grid)
}

fn number(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("'{s}' is not a number"))
}

/// `n` points geometrically spaced on [lo, hi].
pub fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let r = (hi / lo).ln();
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo * (r * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}
