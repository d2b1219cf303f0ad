use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use errsumlab_core::identities::{registry, verify_with, IdentityReport, Params};
use errsumlab_core::{Precision, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Job {
    pub id: String,
    pub params: Params,
}

/// Every registry entry over its default grid, in registry order.
pub fn all_jobs() -> Vec<Job> {
    registry()
        .iter()
        .flat_map(|i| {
            i.default_grid().into_iter().map(move |params| Job {
                id: i.id.to_string(),
                params,
            })
        })
        .collect()
}

/// Timed [`verify_with`].
pub fn run_one(job: &Job, prec: Precision) -> Result<IdentityReport> {
    let start = Instant::now();
    let mut report = verify_with(&job.id, &job.params, prec)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs `jobs` on up to `workers` threads. Results come back in job order.
pub fn run_batch(jobs: &[Job], prec: Precision, workers: usize) -> Vec<Result<IdentityReport>> {
    let workers = workers.clamp(1, jobs.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<IdentityReport>>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let r = run_one(job, prec);
                *slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every job ran"))
        .collect()
}

pub fn default_workers() -> usize {
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_does_not_depend_on_workers() {
        let jobs: Vec<Job> = all_jobs().into_iter().filter(|j| j.id.starts_with("elsner")).collect();
        let p = Precision::new(15);
        let one: Vec<_> = run_batch(&jobs, p, 1).into_iter().map(|r| r.unwrap()).collect();
        let many: Vec<_> = run_batch(&jobs, p, 4).into_iter().map(|r| r.unwrap()).collect();
        assert_eq!(one.len(), 7);
        for (a, b) in one.iter().zip(&many) {
            assert_eq!((&a.id, &a.params, &a.lhs, &a.rhs), (&b.id, &b.params, &b.lhs, &b.rhs));
        }
    }

    #[test]
    fn all_jobs_covers_the_grids() {
        // grids 9 + 4 + 5 + 9 + 5 + 5, plus 9 entries without parameters
        assert_eq!(all_jobs().len(), 46);
    }
}
