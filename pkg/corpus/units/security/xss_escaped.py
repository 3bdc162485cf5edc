"""The same page, escaped before rendering."""

import html


def profile_page(request):
    nick = html.escape(request.args.get("nick"))
    body = "<h1>Hello " + nick + "</h1>"
    return render_html(body)
