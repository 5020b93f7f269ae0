//! Builtin series addressed by name.

use crate::error::{Error, Result};
use crate::expansion::gbs;
use crate::rational::int;
use crate::sequences::{g_from_a, ASequence};
use crate::series::Series;

/// `pascal` (`1/(1-x)`), `catalan`, `motzkin`, or `gbs:r:m` (`B_r(x)^m`).
/// Returns `None` for names that are not builtins.
pub fn named_series(name: &str, order: usize) -> Option<Result<Series>> {
    match name {
        "pascal" => Some(Ok(Series::from_fn(order, |_| int(1)))),
        "catalan" => Some(gbs(2, 1, order)),
        "motzkin" => Some(g_from_a(&ASequence::from_ints(&[1, 1, 1]), order)),
        _ => {
            let rest = name.strip_prefix("gbs:")?;
            let (r, m) = rest.split_once(':')?;
            Some(match (r.parse::<usize>(), m.parse::<i64>()) {
                (Ok(r), Ok(m)) => gbs(r, m, order),
                _ => Err(Error::InvalidParameter),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let s = |name| named_series(name, 6).unwrap().unwrap();
        assert_eq!(s("pascal"), Series::from_ints(&[1; 7]));
        assert_eq!(s("catalan"), Series::from_ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(s("motzkin"), Series::from_ints(&[1, 1, 2, 4, 9, 21, 51]));
        assert_eq!(
            s("gbs:3:2"),
            Series::from_ints(&[1, 2, 7, 30, 143, 728, 3876])
        );
        assert!(named_series("fibonacci", 4).is_none());
        assert_eq!(
            named_series("gbs:x:1", 4),
            Some(Err(Error::InvalidParameter))
        );
    }
}
