//! Compiles the guide in `book/src` as doc-tests, one module per chapter.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/freespace.md")]
pub mod freespace {}
#[doc = include_str!("../../../book/src/rdiagonal.md")]
pub mod rdiagonal {}
#[doc = include_str!("../../../book/src/layout.md")]
pub mod layout {}
#[doc = include_str!("../../../book/src/verify.md")]
pub mod verify {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
