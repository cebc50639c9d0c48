use crate::error::{Error, Result};

/// Number of integer partitions of `r`, by the coin-change recurrence.
pub fn partition_count(r: usize) -> Result<u128> {
    let mut p = vec![0u128; r + 1];
    p[0] = 1;
    for part in 1..=r {
        for total in part..=r {
            p[total] = p[total].checked_add(p[total - part]).ok_or(Error::Overflow("partition count"))?;
        }
    }
    Ok(p[r])
}

/// Partitions of `r` as nonincreasing part lists, in reverse-lexicographic
/// order: `[r]` first, all ones last. `r = 0` gives the single empty partition.
pub fn partitions(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(r, r, &mut cur, &mut out);
    out
}

fn fill(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=cap.min(rest)).rev() {
        cur.push(part);
        fill(rest - part, part, cur, out);
        cur.pop();
    }
}

/// Partitions of `r` into at most `max_parts` parts.
pub(crate) fn partitions_at_most(r: usize, max_parts: usize) -> Vec<Vec<usize>> {
    partitions(r).into_iter().filter(|p| p.len() <= max_parts).collect()
}
