//! IO, report formats and the check harness around the `total-forcing`
//! library.

pub mod census;
pub mod corpus;
pub mod report;

use total_forcing::families::Family;

/// Parse a family name plus numeric parameters, as given on the command
/// line.
pub fn parse_family(name: &str, params: &[usize]) -> Result<Family, String> {
    let one = |what: &str| -> Result<usize, String> {
        match params {
            [k] => Ok(*k),
            _ => Err(format!("family {what} takes exactly one parameter")),
        }
    };
    match name {
        "path" => Ok(Family::Path(one("path")?)),
        "cycle" => Ok(Family::Cycle(one("cycle")?)),
        "complete" => Ok(Family::Complete(one("complete")?)),
        "star" => Ok(Family::Star(one("star")?)),
        "spider" => Ok(Family::Spider(one("spider")?)),
        "fig1b" => {
            if params.is_empty() {
                Ok(Family::Fig1b)
            } else {
                Err(String::from("family fig1b takes no parameters"))
            }
        }
        "fig1b_chain" => Ok(Family::Fig1bChain(one("fig1b_chain")?)),
        other => Err(format!("unknown family: {other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parsing() {
        assert!(matches!(parse_family("cycle", &[5]), Ok(Family::Cycle(5))));
        assert!(matches!(parse_family("fig1b", &[]), Ok(Family::Fig1b)));
        assert!(parse_family("cycle", &[]).is_err());
        assert!(parse_family("mystery", &[1]).is_err());
    }
}
