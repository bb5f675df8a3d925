//! Acceptance checks for the pahwalk workspace live in `tests/acceptance.rs`.
//! Each check prints one `PASS`/`FAIL` line; run them with
//! `cargo test -p pahwalk-validation -- --nocapture`.
