/// One CSV cell. Reals use 17 significant digits; undefined cells stay empty.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(i64),
    Text(&'static str),
    Empty,
}

impl Cell {
    pub fn opt(v: Option<f64>) -> Cell {
        v.map_or(Cell::Empty, Cell::Real)
    }

    fn render(&self, out: &mut String) {
        use std::fmt::Write;
        match self {
            Cell::Real(v) if v.is_finite() => write!(out, "{v:.16e}").unwrap(),
            Cell::Real(_) | Cell::Empty => {}
            Cell::Int(v) => write!(out, "{v}").unwrap(),
            Cell::Text(s) => out.push_str(s),
        }
    }
}

pub fn render_row(cells: &[Cell]) -> String {
    let mut out = String::new();
    for (i, c) in cells.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        c.render(&mut out);
    }
    out.push('\n');
    out
}

pub fn render_table(header: &[&str], rows: &[String]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(r);
    }
    out
}
