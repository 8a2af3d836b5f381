//! Exact parsing of command-line operands.

use binsquare::Rat;
use num_bigint::BigInt;

/// Malformed input, reported before any computation.
#[derive(Debug)]
pub struct UsageError(pub String);

pub fn rat(name: &str, s: &str) -> Result<Rat, UsageError> {
    s.parse()
        .map_err(|_| UsageError(format!("{name}: expected p or p/q, got {s:?}")))
}

pub fn int(name: &str, s: &str) -> Result<BigInt, UsageError> {
    s.parse()
        .map_err(|_| UsageError(format!("{name}: expected an integer, got {s:?}")))
}

const GLOBAL_FLAGS: [&str; 3] = ["--format", "--effort", "--precision"];

/// Moves global flags ahead of the subcommand.
///
/// Operands may start with `-` (negative rationals), so positional lists
/// accept hyphen values and would otherwise swallow a trailing `--format`.
pub fn hoist_global_flags(argv: Vec<String>) -> Vec<String> {
    let mut iter = argv.into_iter();
    let mut flags: Vec<String> = iter.next().into_iter().collect();
    let mut rest = Vec::new();
    while let Some(arg) = iter.next() {
        if arg == "--" {
            rest.push(arg);
            rest.extend(iter.by_ref());
            break;
        }
        let name = arg.split('=').next().unwrap_or_default();
        if GLOBAL_FLAGS.contains(&name) {
            let inline = arg.contains('=');
            flags.push(arg);
            if !inline {
                flags.extend(iter.next());
            }
        } else {
            rest.push(arg);
        }
    }
    flags.extend(rest);
    flags
}

/// Affine coordinates, or `None` for the point at infinity.
pub type Coords = Option<(Rat, Rat)>;

/// Reads one point from the front of `toks`: `inf` or `x y`.
pub fn point(toks: &[String]) -> Result<(Coords, &[String]), UsageError> {
    match toks {
        [] => Err(UsageError("missing point".into())),
        [first, rest @ ..] if first == "inf" => Ok((None, rest)),
        [x, y, rest @ ..] if y != "inf" => Ok((Some((rat("x", x)?, rat("y", y)?)), rest)),
        _ => Err(UsageError(format!("incomplete point in {toks:?}"))),
    }
}

pub fn single_point(toks: &[String]) -> Result<Coords, UsageError> {
    let (p, rest) = point(toks)?;
    no_extra(rest)?;
    Ok(p)
}

pub fn no_extra(rest: &[String]) -> Result<(), UsageError> {
    if rest.is_empty() {
        Ok(())
    } else {
        Err(UsageError(format!("unexpected arguments {rest:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn points_parse() {
        let t = toks("3 -5 inf");
        let (p, rest) = point(&t).unwrap();
        assert_eq!(p, Some((Rat::from(3), Rat::from(-5))));
        let (q, rest) = point(rest).unwrap();
        assert_eq!(q, None);
        assert!(rest.is_empty());
        assert!(single_point(&toks("3")).is_err());
        assert!(single_point(&toks("3 inf")).is_err());
        assert!(single_point(&toks("1/2 x")).is_err());
        assert!(single_point(&toks("inf 1")).is_err());
    }

    #[test]
    fn global_flags_move_to_front() {
        let got = hoist_global_flags(toks(
            "bin curve-add -2 3 -5 inf --format structured --effort=10",
        ));
        assert_eq!(
            got,
            toks("bin --format structured --effort=10 curve-add -2 3 -5 inf")
        );
        let got = hoist_global_flags(toks("bin norm -- --format x"));
        assert_eq!(got, toks("bin norm -- --format x"));
    }

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(rat("x", "-16641/7660").unwrap(), Rat::new(-16641, 7660));
        assert!(rat("x", "1.5").is_err());
        assert!(rat("x", "1/0").is_err());
        assert!(int("k", "2/3").is_err());
        assert_eq!(
            int("k", "123456789012345678901234567890")
                .unwrap()
                .to_string(),
            "123456789012345678901234567890"
        );
    }
}
