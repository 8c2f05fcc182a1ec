//! Finds a cycle longer than the minimum degree in random tournaments.

use longcycle::harness::random_tournament;
use longcycle::mindeg_plus_one_cycle;

fn main() {
    for seed in 0..5 {
        let d = random_tournament(12, seed);
        match mindeg_plus_one_cycle(&d) {
            Ok(c) => println!(
                "tournament seed {seed}: mindeg={} cycle length={} [{c}]",
                d.mindeg().unwrap(),
                c.len()
            ),
            Err(e) => println!("tournament seed {seed}: {e}"),
        }
    }
}
