pub mod domain;
pub mod io;
#[allow(clippy::module_inception)]
pub mod tiling;
pub mod verify;
pub mod wild;
pub mod window;

pub use domain::{Domain, Interval};
pub use tiling::{translate, transpose, window, Evaluator, Memo, Tiling};
pub use verify::{check_tame, verify_slk, Failure, VerifyReport};
pub use wild::{wild_sl2, wild_sl3, wild_sl4};
pub use window::Window;
