"""Search with early exits scattered through the loop body."""


def handle_search(index, terms, limit):
    hits = []
    seen = 0
    for term in terms:
        if not term:
            continue
        if term in index:
            for doc in index[term]:
                if doc in hits:
                    continue
                hits.append(doc)
                if len(hits) >= limit:
                    return hits
        elif term.endswith("*"):
            stem = term[:-1]
            for key in index:
                if key.startswith(stem) and len(key) > 2:
                    hits.append(key)
        seen += 1
        if seen > 100 or len(hits) > 1000:
            print("search aborted")
            return hits
    return hits
