use crate::partition::Nat;

/// Exact maximum plus every witness that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxResult<W> {
    pub value: Nat,
    pub witnesses: Vec<W>,
}

impl<W> MaxResult<W> {
    pub fn map<V>(self, f: impl FnMut(W) -> V) -> MaxResult<V> {
        MaxResult { value: self.value, witnesses: self.witnesses.into_iter().map(f).collect() }
    }
}

/// Running argmax. Ties keep every witness in arrival order.
#[derive(Debug)]
pub(crate) struct Argmax<W> {
    best: Option<MaxResult<W>>,
}

impl<W> Argmax<W> {
    pub fn new() -> Self {
        Argmax { best: None }
    }

    pub fn offer(&mut self, value: Nat, witness: W) {
        match &mut self.best {
            Some(b) if value < b.value => {}
            Some(b) if value == b.value => b.witnesses.push(witness),
            _ => self.best = Some(MaxResult { value, witnesses: vec![witness] }),
        }
    }

    pub fn finish(self) -> Option<MaxResult<W>> {
        self.best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_ties_and_resets_on_improvement() {
        let mut m = Argmax::new();
        m.offer(Nat::from(3u32), 'a');
        m.offer(Nat::from(5u32), 'b');
        m.offer(Nat::from(5u32), 'c');
        m.offer(Nat::from(4u32), 'd');
        let r = m.finish().unwrap();
        assert_eq!(r.value, Nat::from(5u32));
        assert_eq!(r.witnesses, vec!['b', 'c']);
        assert!(Argmax::<u8>::new().finish().is_none());
    }
}
