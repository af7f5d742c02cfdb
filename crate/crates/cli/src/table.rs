use alphanorm::verify::fmt_num;

/// CSV accumulated in memory and written in one go.
pub struct Table {
    out: String,
    width: usize,
}

impl Table {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        let cols: Vec<&str> = header.iter().map(AsRef::as_ref).collect();
        Self { out: format!("{}\n", cols.join(",")), width: cols.len() }
    }

    /// A `#` comment above the header.
    pub fn with_comment(comment: &str, header: &[&str]) -> Self {
        let mut t = Self::new(header);
        t.out.insert_str(0, &format!("# {comment}\n"));
        t
    }

    pub fn row(&mut self, cells: &[f64]) {
        debug_assert_eq!(cells.len(), self.width);
        let cells: Vec<String> = cells.iter().map(|&x| fmt_num(x)).collect();
        self.out.push_str(&cells.join(","));
        self.out.push('\n');
    }

    pub fn finish(self) -> String {
        self.out
    }
}
