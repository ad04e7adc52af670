//! Command implementations and SVG rendering behind the `qshape` binary.

pub mod commands;
pub mod plot;

pub use commands::{
    cmd_converge, cmd_plot, cmd_qbinom, cmd_regions, cmd_shape, plot_spec, CommandError, Format, PlotOptions,
    ShapeMode,
};
