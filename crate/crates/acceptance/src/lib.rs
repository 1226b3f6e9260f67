//! Empty; the criteria live in .
