"""CSV-ish importer with validation tangled into the parsing loop."""


def import_rows(lines, table):
    if not lines and not table:
        return 0, 0, []
    imported = 0
    skipped = 0
    errors = []
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            skipped += 1
        else:
            parts = text.split(",")
            if len(parts) != 3:
                errors.append(text)
            elif parts[0] in table:
                table[parts[0]] += int(parts[2])
                imported += 1
            else:
                table[parts[0]] = int(parts[2])
                imported += 1
    for key in table:
        if table[key] < 0 or table[key] > 1000:
            errors.append(key)
    if errors:
        print("import finished with errors")
    return imported, skipped, errors
