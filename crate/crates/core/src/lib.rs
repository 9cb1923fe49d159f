//! Exact character tables, Galois actions and principal `p`-blocks of finite
//! permutation groups, together with executable checks of statements about
//! `σ`-invariant height-zero characters.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod perm;
pub mod permgrp;
pub mod cyclo;
pub mod chartab;
pub mod blocks;
pub mod theorems;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use permgrp::{ClassData, PermGroup};
