//! Job configuration, orchestration and report emission.

mod config;
mod report;

pub use config::{JobConfig, Task};
pub use report::{
    render_text, run, write_atomic, CellRow, CriterionSection, GradingSection, IdentitySection, LevelRow, Report,
    RootSystemSection, StratificationSection, LOWRANK_SAMPLES, VERSION,
};
