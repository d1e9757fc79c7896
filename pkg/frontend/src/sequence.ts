/** Request sequencing: responses landing after a newer request started are
 * stale and must not touch the screen. */

export class SequenceGate {
  private latest = 0;

  /** Claim a ticket before starting a request. */
  next(): number {
    this.latest += 1;
    return this.latest;
  }

  /** True when a newer ticket has been issued since this one. */
  isStale(ticket: number): boolean {
    return ticket !== this.latest;
  }

  /** Run an async producer and deliver its result only if still current. */
  async run<T>(
    producer: () => Promise<T>,
    deliver: (value: T) => void,
    onError?: (error: unknown) => void,
  ): Promise<void> {
    const ticket = this.next();
    try {
      const value = await producer();
      if (!this.isStale(ticket)) deliver(value);
    } catch (error) {
      if (!this.isStale(ticket) && onError) onError(error);
    }
  }
}
