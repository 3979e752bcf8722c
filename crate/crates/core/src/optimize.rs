//! Nelder-Mead simplex minimisation over `R^D`.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    pub max_iterations: usize,
    /// Stop when the best value drops below this.
    pub target: f64,
    /// Stop when all simplex vertices lie within this distance of the best
    /// one along every coordinate.
    pub x_tolerance: f64,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        NelderMeadOptions {
            max_iterations: 2000,
            target: 0.0,
            x_tolerance: 1e-14,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum<const D: usize> {
    pub point: [f64; D],
    pub value: f64,
    pub iterations: usize,
}

fn lerp<const D: usize>(from: &[f64; D], to: &[f64; D], t: f64) -> [f64; D] {
    let mut out = [0.0; D];
    for k in 0..D {
        out[k] = from[k] + t * (to[k] - from[k]);
    }
    out
}

/// Minimises `f` from an axis-aligned initial simplex of edge `step`.
pub fn nelder_mead<const D: usize>(
    mut f: impl FnMut(&[f64; D]) -> f64,
    start: [f64; D],
    step: f64,
    opts: NelderMeadOptions,
) -> Minimum<D> {
    // only the first D + 1 slots are used
    assert!(D >= 1 && D < 8, "dimension {D} unsupported");
    let mut pts = [[0.0; D]; 8];
    let mut vals = [0.0; 8];
    pts[0] = start;
    for k in 0..D {
        pts[k + 1] = start;
        pts[k + 1][k] += step;
    }
    for i in 0..=D {
        vals[i] = f(&pts[i]);
    }

    let mut iterations = 0;
    while iterations < opts.max_iterations {
        iterations += 1;
        // insertion sort by value
        for i in 1..=D {
            let mut j = i;
            while j > 0 && vals[j] < vals[j - 1] {
                vals.swap(j, j - 1);
                pts.swap(j, j - 1);
                j -= 1;
            }
        }
        if vals[0] <= opts.target {
            break;
        }
        let spread = (1..=D)
            .flat_map(|i| (0..D).map(move |k| (i, k)))
            .map(|(i, k)| (pts[i][k] - pts[0][k]).abs())
            .fold(0.0, f64::max);
        if spread < opts.x_tolerance {
            break;
        }

        let mut centroid = [0.0; D];
        for p in &pts[..D] {
            for k in 0..D {
                centroid[k] += p[k] / D as f64;
            }
        }
        let worst = pts[D];
        let reflected = lerp(&centroid, &worst, -1.0);
        let fr = f(&reflected);
        if fr < vals[0] {
            let expanded = lerp(&centroid, &worst, -2.0);
            let fe = f(&expanded);
            if fe < fr {
                pts[D] = expanded;
                vals[D] = fe;
            } else {
                pts[D] = reflected;
                vals[D] = fr;
            }
            continue;
        }
        if fr < vals[D - 1] {
            pts[D] = reflected;
            vals[D] = fr;
            continue;
        }
        let (contracted, fc) = if fr < vals[D] {
            let c = lerp(&centroid, &reflected, 0.5);
            let v = f(&c);
            (c, v)
        } else {
            let c = lerp(&centroid, &worst, 0.5);
            let v = f(&c);
            (c, v)
        };
        if fc < vals[D].min(fr) {
            pts[D] = contracted;
            vals[D] = fc;
            continue;
        }
        // shrink towards the best vertex
        let best = pts[0];
        for i in 1..=D {
            pts[i] = lerp(&best, &pts[i], 0.5);
            vals[i] = f(&pts[i]);
        }
    }

    let best = (0..=D)
        .min_by(|&a, &b| vals[a].total_cmp(&vals[b]))
        .unwrap_or(0);
    Minimum {
        point: pts[best],
        value: vals[best],
        iterations,
    }
}
