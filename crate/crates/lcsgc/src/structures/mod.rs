//! Range-query data structures backing the fast solvers.

pub mod grid;
pub mod rmq2d;
pub mod segtree2d;
pub mod windowed;

pub use grid::Grid;
pub use rmq2d::SquareRmq;
pub use segtree2d::SegmentTree2d;
pub use windowed::{ScanStats, Window, WindowScanner, WindowedMaxGrid};
