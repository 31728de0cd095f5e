use super::filling::Filling;
use super::partition::Partition;
use super::reading::{yamanouchi_words, Reading};
use super::tableau::Tableau;
use crate::error::{Error, Result};

fn check_shape(lambda: &Partition, f: &Filling) -> Result<()> {
    if f.inner() != lambda {
        return Err(Error::DimensionMismatch(format!("shape {lambda} but the filling completes {}", f.inner())));
    }
    Ok(())
}

/// Readings of `outer`-shaped tableaux whose last `N - n` labels are fixed by `f`, in
/// lexicographic order.
pub fn agreeing_readings(f: &Filling) -> Vec<Reading> {
    let suffix = f.labels();
    yamanouchi_words(f.inner())
        .into_iter()
        .map(|w| {
            let mut labels = w.labels().to_vec();
            labels.extend_from_slice(&suffix);
            Reading::new(labels).expect("a standard skew filling extends every Yamanouchi prefix")
        })
        .collect()
}

/// Standard tableaux of shape `outer` agreeing with `f`, ordered by reading.
pub fn enumerate_syt_full(f: &Filling) -> Vec<Tableau> {
    agreeing_readings(f).iter().map(Reading::to_syt).collect()
}

/// Non-crossing tableaux of shape `outer` carrying `f` at the bottom of their columns,
/// ordered by reading.
pub fn enumerate_nct_full(f: &Filling) -> Vec<Tableau> {
    agreeing_readings(f).iter().map(Reading::to_nct).filter(|t| f.agrees(t)).collect()
}

/// Standard Young tableaux of shape `lambda` (the filling removed), ordered by reading.
pub fn enumerate_syt(lambda: &Partition, f: &Filling) -> Result<Vec<Tableau>> {
    check_shape(lambda, f)?;
    enumerate_syt_full(f).iter().map(|t| f.strip(t)).collect()
}

/// Non-crossing tableaux of shape `lambda` agreeing with `f` (the filling removed, columns
/// in canonical order), ordered by reading.
pub fn enumerate_nct(lambda: &Partition, f: &Filling) -> Result<Vec<Tableau>> {
    check_shape(lambda, f)?;
    enumerate_nct_full(f).iter().map(|t| Ok(f.strip(t)?.canonical())).collect()
}

/// Non-crossing tableaux of shape `lambda` under the filling-free definition.
pub fn enumerate_nct_restated(lambda: &Partition) -> Vec<Tableau> {
    yamanouchi_words(lambda).iter().map(Reading::to_nct).collect()
}

/// Standard Young tableaux of shape `lambda`, ordered by reading.
pub fn enumerate_syt_restated(lambda: &Partition) -> Vec<Tableau> {
    yamanouchi_words(lambda).iter().map(Reading::to_syt).collect()
}

/// Every filling of `lambda` by `1..=n` with increasing columns, columns in Young order.
pub fn fillings_of_shape(lambda: &Partition) -> Vec<Tableau> {
    fn rec(free: &mut Vec<u32>, lens: &[usize], cur: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        let Some((&k, more)) = lens.split_first() else {
            out.push(Tableau::new(cur.clone()).expect("sorted columns"));
            return;
        };
        let pool = free.clone();
        choose(&pool, k, 0, &mut Vec::new(), &mut |col| {
            free.retain(|v| !col.contains(v));
            cur.push(col.to_vec());
            rec(free, more, cur, out);
            cur.pop();
            *free = pool.clone();
        });
    }
    fn choose(pool: &[u32], k: usize, from: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i]);
            choose(pool, k, i + 1, cur, f);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut free: Vec<u32> = (1..=lambda.size() as u32).collect();
    rec(&mut free, &lambda.column_lengths(), &mut Vec::new(), &mut out);
    out
}

fn extended_reading(t: &Tableau, f: &Filling) -> Result<Reading> {
    let mut labels = t.reading()?.labels().to_vec();
    labels.extend(f.labels());
    Reading::new(labels)
}

/// Image of a standard tableau of shape `f.inner()` under the shared-reading bijection.
pub fn syt_to_nct(t: &Tableau, f: &Filling) -> Result<Tableau> {
    if !t.is_standard() || &t.shape() != f.inner() {
        return Err(Error::Classification { expected: "standard Young tableau of the filling's inner shape" });
    }
    let full = extended_reading(t, f)?.to_nct();
    Ok(f.strip(&full)?.canonical())
}

/// Inverse of [`syt_to_nct`]. Column order of the input is irrelevant.
pub fn nct_to_syt(t: &Tableau, f: &Filling) -> Result<Tableau> {
    if !t.canonical().is_nct() || &t.shape() != f.inner() {
        return Err(Error::Classification { expected: "non-crossing tableau of the filling's inner shape" });
    }
    let full = extended_reading(t, f)?.to_syt();
    f.strip(&full)
}
