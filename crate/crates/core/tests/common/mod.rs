// Each integration test binary compiles this module separately and uses
// only the tables it needs.
#![allow(dead_code)]

pub mod ml_reference;
