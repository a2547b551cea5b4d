//! Lexical diversity: TTR and its length-corrected variants.
//!
//! All four operate on case-folded word forms (numbers excluded) and are
//! total: the empty document scores 0.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;

/// Segment length for the mean sequential TTR.
pub const MSTTR_SEGMENT: usize = 50;
/// Window length for the moving-average TTR.
pub const MATTR_WINDOW: usize = 100;
/// Factor threshold recommended by MTLD's authors.
pub const MTLD_THRESHOLD: f64 = 0.720;

/// Type-token ratio: unique forms over total forms.
pub fn ttr(forms: &[&str]) -> f64 {
    if forms.is_empty() {
        return 0.0;
    }
    let types: BTreeSet<&str> = forms.iter().copied().collect();
    types.len() as f64 / forms.len() as f64
}

/// Mean TTR over consecutive non-overlapping 50-word segments, discarding
/// the trailing partial segment. Texts shorter than one segment fall back
/// to the plain TTR.
pub fn msttr(forms: &[&str]) -> f64 {
    if forms.len() < MSTTR_SEGMENT {
        return ttr(forms);
    }
    let mut total = 0.0;
    let mut segments = 0usize;
    for chunk in forms.chunks_exact(MSTTR_SEGMENT) {
        total += ttr(chunk);
        segments += 1;
    }
    total / segments as f64
}

/// Mean TTR over every contiguous 100-word window (stride 1). Texts shorter
/// than the window fall back to the plain TTR.
pub fn mattr(forms: &[&str]) -> f64 {
    if forms.len() < MATTR_WINDOW {
        return ttr(forms);
    }
    // Incremental multiset of the sliding window.
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    let mut distinct = 0usize;
    for &form in &forms[..MATTR_WINDOW] {
        let c = counts.entry(form).or_insert(0);
        if *c == 0 {
            distinct += 1;
        }
        *c += 1;
    }
    let mut total = distinct as f64 / MATTR_WINDOW as f64;
    let mut windows = 1usize;
    for i in MATTR_WINDOW..forms.len() {
        let leaving = counts.get_mut(forms[i - MATTR_WINDOW]).expect("in window");
        *leaving -= 1;
        if *leaving == 0 {
            distinct -= 1;
        }
        let entering = counts.entry(forms[i]).or_insert(0);
        if *entering == 0 {
            distinct += 1;
        }
        *entering += 1;
        total += distinct as f64 / MATTR_WINDOW as f64;
        windows += 1;
    }
    total / windows as f64
}

/// Measure of textual lexical diversity: words per TTR "factor", averaged
/// over a forward and a backward pass, with McCarthy's fractional final
/// factor `(1 - TTR) / (1 - 0.720)`.
pub fn mtld(forms: &[&str]) -> f64 {
    if forms.is_empty() {
        return 0.0;
    }
    let forward = mtld_pass(forms.iter().copied());
    let backward = mtld_pass(forms.iter().rev().copied());
    (forward + backward) / 2.0
}

fn mtld_pass<'a>(forms: impl Iterator<Item = &'a str>) -> f64 {
    let mut factors = 0.0f64;
    let mut window: BTreeSet<&str> = BTreeSet::new();
    let mut window_len = 0usize;
    let mut total = 0usize;

    for form in forms {
        total += 1;
        window.insert(form);
        window_len += 1;
        let ttr = window.len() as f64 / window_len as f64;
        if ttr < MTLD_THRESHOLD {
            factors += 1.0;
            window.clear();
            window_len = 0;
        }
    }
    if window_len > 0 {
        let ttr = window.len() as f64 / window_len as f64;
        factors += (1.0 - ttr) / (1.0 - MTLD_THRESHOLD);
    }
    if factors == 0.0 {
        // Only reachable when every window kept TTR at 1.0 (all-unique text):
        // the partial factor is 0 by the formula.
        return total as f64;
    }
    total as f64 / factors
}
