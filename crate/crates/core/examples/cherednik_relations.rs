//! Runs the graded and rational Cherednik relation suites at rank three.

use cherednik::suites::{run, SuiteParams};

fn main() -> cherednik::Result<()> {
    let p = SuiteParams::new(3, 1);
    for suite in ["hgr1", "hgr2", "rat"] {
        for report in run(suite, &p, true)? {
            print!("{}", report.render_text());
            assert!(report.passed());
        }
    }
    Ok(())
}
