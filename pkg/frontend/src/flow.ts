// Small async helpers for the lookup panel: debounced input and a
// guard that drops results of superseded requests so a stale response
// never overwrites a newer query's.

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void, ms: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

/** Wraps promises; resolves to null for any promise that is no longer
 * the most recently issued one. */
export class LatestOnly {
  private seq = 0;

  async track<T>(promise: Promise<T>): Promise<T | null> {
    const ticket = ++this.seq;
    try {
      const value = await promise;
      return ticket === this.seq ? value : null;
    } catch (err) {
      if (ticket === this.seq) throw err;
      return null;
    }
  }
}
