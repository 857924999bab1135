//! Lifting properties and iterated orthogonals over finite categories.
//!
//! [`engine`] is generic over a [`engine::Category`]; [`fintop`] supplies finite
//! topological spaces, [`notation`] their arrow-diagram syntax.

pub mod engine;
pub mod fintop;
pub mod notation;
pub mod fingrp;
pub mod harness;
